// Temporary development harness; deleted before delivery.
#include <iostream>
#include <map>
#include <set>

#include "lcn/canon.hpp"
#include "lcn/monoid.hpp"
#include "lcn/oracle.hpp"

using namespace lcn;

int main() {
  // Universe sizes.
  for (int n = 1; n <= 9; ++n) {
    Universe u = Universe::build(n);
    std::cout << "|LC_" << n << "| = " << u.size();
    if (n >= 4) {
      auto direct = enumerate_canonical(n);
      std::set<std::string> a, b;
      for (int i = 0; i < u.size(); ++i) a.insert(u.form(i).str());
      for (auto& cf : direct) b.insert(cf.str());
      std::cout << "  direct=" << direct.size()
                << " set_eq=" << (a == b ? "yes" : "NO");
      if (a != b) {
        for (auto& s : a)
          if (!b.count(s)) std::cout << "\n  universe-only: " << s;
        for (auto& s : b)
          if (!a.count(s)) std::cout << "\n  direct-only: " << s;
      }
    }
    // Todd-Coxeter cross count
    auto tc = oracle::enumerate_elements(oracle::lc_presentation(n));
    std::cout << "  tc=" << tc.element_count
              << (tc.element_count == u.size() ? " ok" : " MISMATCH") << "\n";
  }

  // Element sets for n = 2, 3.
  {
    Universe u2 = Universe::build(2);
    for (int i = 0; i < u2.size(); ++i)
      std::cout << "LC2[" << i << "] = " << u2.form(i).str() << "\n";
    Universe u3 = Universe::build(3);
    for (int i = 0; i < u3.size(); ++i)
      std::cout << "LC3[" << i << "] = " << u3.form(i).str() << "\n";
  }

  // Spot canonicalizations.
  std::cout << "canon(n=6, a5.a1.a6) = "
            << canonicalize(Word::parse(6, "a5.a1.a6")).str() << "\n";
  std::cout << "canon(n=3, a2.a1) kind = "
            << to_string(canonicalize(Word::parse(3, "a2.a1")).kind()) << "\n";
  std::cout << "canon(n=4, a1.a2.a3.a4) = "
            << canonicalize(Word::parse(4, "a1.a2.a3.a4")).str() << "\n";
  std::cout << "canon(n=7, a1.a2.a5) = "
            << canonicalize(Word::parse(7, "a1.a2.a5")).str() << "\n";
  std::cout << "canon(n=8, a1.a4.a5.a1.a2.a5) = "
            << canonicalize(Word::parse(8, "a1.a4.a5.a1.a2.a5")).str() << "\n";

  // Catalan counts via Todd-Coxeter.
  for (int n = 1; n <= 7; ++n) {
    auto tc = oracle::enumerate_elements(oracle::catalan_presentation(n));
    std::cout << "|C_" << n << "| = " << tc.element_count
              << " formula=" << catalan_number(n)
              << (catalan_cardinality_check(n) ? " ok" : " MISMATCH") << "\n";
  }

  // Oracle arena vs canonicalize fibers, n = 2..4 at length 8.
  for (int n = 2; n <= 4; ++n) {
    auto classes =
        oracle::congruence_classes(oracle::lc_presentation(n), 8);
    Universe u = Universe::build(n);
    std::cout << "arena n=" << n << ": classes=" << classes.class_count()
              << " stable=" << classes.stable() << " |LC|=" << u.size();
    // check fibers
    bool fibers_ok = true;
    std::map<std::int64_t, std::string> class_to_canon;
    std::set<std::string> canon_seen;
    std::vector<int> w;
    for (int len = 0; len <= 8 && fibers_ok; ++len) {
      w.assign(len, 1);
      while (true) {
        Word word(n, w);
        auto cls = classes.class_of(classes.index_of(word));
        auto canon = canonicalize(word).str();
        canon_seen.insert(canon);
        auto [it, fresh] = class_to_canon.emplace(cls, canon);
        if (!fresh && it->second != canon) {
          std::cout << "\n  fiber split: " << word.str() << " canon " << canon
                    << " vs " << it->second;
          fibers_ok = false;
          break;
        }
        int i = len - 1;
        while (i >= 0 && w[i] == n) {
          w[i] = 1;
          --i;
        }
        if (i < 0) break;
        ++w[i];
      }
    }
    std::cout << "  fibers=" << (fibers_ok ? "ok" : "SPLIT")
              << " distinct_canons=" << canon_seen.size()
              << " classes==" << class_to_canon.size() << "\n";
  }
  return 0;
}
