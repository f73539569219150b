// Temporary: find arena lengths where the congruence converges.
#include <chrono>
#include <iostream>

#include "lcn/monoid.hpp"
#include "lcn/oracle.hpp"

using namespace lcn;

int main(int argc, char** argv) {
  const int n = std::atoi(argv[1]);
  const int len = std::atoi(argv[2]);
  Universe u = Universe::build(n);
  auto t0 = std::chrono::steady_clock::now();
  auto classes = oracle::congruence_classes(oracle::lc_presentation(n), len);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "n=" << n << " len=" << len
            << " classes=" << classes.class_count()
            << " stable=" << classes.stable() << " |LC|=" << u.size()
            << " words=" << classes.word_count() << " time="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << "ms\n";
  return 0;
}
