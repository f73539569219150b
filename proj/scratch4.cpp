// Temporary: classes of words <= qlen inside arenas of growing size.
#include <chrono>
#include <iostream>
#include <set>

#include "lcn/oracle.hpp"

using namespace lcn;

int main(int argc, char** argv) {
  const int n = std::atoi(argv[1]);
  const int qlen = std::atoi(argv[2]);
  const int arena = std::atoi(argv[3]);
  auto t0 = std::chrono::steady_clock::now();
  auto classes = oracle::congruence_classes(oracle::lc_presentation(n), arena);
  std::set<std::int64_t> roots;
  std::vector<int> w;
  for (int len = 0; len <= qlen; ++len) {
    w.assign(len, 1);
    while (true) {
      roots.insert(classes.class_of(classes.index_of(Word(n, w))));
      int i = len - 1;
      while (i >= 0 && w[i] == n) {
        w[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++w[i];
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "n=" << n << " arena=" << arena << " qlen=" << qlen
            << " restricted_classes=" << roots.size() << " time="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << "ms\n";
  return 0;
}
