#include "ccode/countingcode.hpp"

#include <stdexcept>

#include "ccode/graycode.hpp"

namespace ccode {

CountingBuildTrace trace_counting_build(int width) {
  if (width < 2 || width > kMaxWidth)
    throw std::out_of_range("counting code width must be in 2..16, got " +
                            std::to_string(width));

  CountingBuildTrace trace;
  trace.gray_seed = generate_gray(width - 1).entries();

  trace.mirrored = trace.gray_seed;
  trace.mirrored.insert(trace.mirrored.end(), trace.gray_seed.rbegin(),
                        trace.gray_seed.rend());

  trace.complemented = trace.mirrored;
  for (size_t j = 1; j < trace.complemented.size(); j += 2)
    trace.complemented[j] = trace.complemented[j].complement();

  trace.prefixed.reserve(trace.complemented.size());
  for (size_t j = 0; j < trace.complemented.size(); ++j)
    trace.prefixed.push_back(
        trace.complemented[j].with_prefix(static_cast<int>(j & 1)));

  return trace;
}

CodeTable generate_counting(int width) {
  return CodeTable::from_entries(width, trace_counting_build(width).prefixed);
}

}  // namespace ccode
