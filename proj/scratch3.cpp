// Temporary: inspect unmerged arena classes and hunt for rewrite chains.
#include <iostream>
#include <map>
#include <queue>
#include <set>

#include "lcn/canon.hpp"
#include "lcn/monoid.hpp"
#include "lcn/oracle.hpp"

using namespace lcn;

int main() {
  const int n = 3;
  auto p = oracle::lc_presentation(n);
  std::cout << "relations:\n";
  for (auto& [a, b] : p.relations) {
    std::cout << "  " << a.str() << " ~ " << b.str() << "\n";
  }
  auto classes = oracle::congruence_classes(p, 8);
  std::cout << "classes=" << classes.class_count() << "\n";
  for (const Word& rep : classes.class_representatives()) {
    std::cout << "  rep " << rep.str() << "   canon "
              << canonicalize(Word(n, rep.letters())).str() << " ("
              << to_string(canonicalize(Word(n, rep.letters())).kind())
              << ")\n";
  }

  // BFS in the rewrite graph from a2a1 within growing length bounds.
  auto tc = oracle::enumerate_elements(p);
  std::cout << "tc(a2.a1)=" << tc.trace(Word::parse(n, "a2.a1"))
            << " tc(a1.a3)=" << tc.trace(Word::parse(n, "a1.a3"))
            << " tc(a3.a2)=" << tc.trace(Word::parse(n, "a3.a2")) << "\n";
  return 0;
}
