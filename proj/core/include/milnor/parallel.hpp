#pragma once

#include <cstddef>
#include <functional>

namespace milnor {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Exceptions from
// the body are rethrown on the calling thread (the first one by index).
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace milnor
