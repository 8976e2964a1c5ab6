#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace clsnet {

// Float formatting for CSV artifacts: 17 significant digits round-trips a double.
std::string format_g17(double value);
std::string format_g(double value, int digits);

// Worker count: CLSNET_THREADS env var, else hardware concurrency.
unsigned thread_count();

// Runs fn(0..count-1) across threads. Items must be independent; callers that
// need deterministic output collect per-item results and reduce in index order.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex_file(const std::string& path);

} // namespace clsnet
