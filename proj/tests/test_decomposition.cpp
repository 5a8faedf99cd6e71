#include <doctest.h>

#include "nilfree/ideals.hpp"
#include "nilfree/symfunc.hpp"

using namespace nilfree;

namespace {

bool is_hook(const Partition& lam) { return lam.length() <= 1 || lam.parts[1] <= 1; }

int part(const Partition& lam, int i) { return i < lam.length() ? lam.parts[i] : 0; }

}  // namespace

TEST_CASE("Grassmann quotient has one copy of each hook") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 7; ++d) {
      const auto m = schur_decompose(quotient_weight_table(n, 2, d));
      for (const Partition& lam : partitions(d, n)) {
        CAPTURE(lam.str());
        CHECK(m.at(lam) == (is_hook(lam) ? 1 : 0));
      }
    }
  for (int d = 2; d <= 7; ++d) CHECK(module_dimension(schur_decompose(quotient_weight_table(2, 2, d)), 2) == 2 * d);
}

TEST_CASE("row bounds and the tensor round trip") {
  const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [n, p] : cases) {
    int max_b1 = 0;
    for (int d = 0; d <= 6; ++d) {
      const WeightTable f = quotient_weight_table(n, p, d);
      const auto fm = schur_decompose(f);
      for (const auto& [lam, k] : fm.mult)
        if (k) CHECK(part(lam, 1) <= p - 1);
    }
    // B = F / S(V), degree by degree
    std::vector<WeightTable> fs;
    for (int d = 0; d <= 6; ++d) fs.push_back(quotient_weight_table(n, p, d));
    const auto bs = divide_by_sv(fs);
    for (std::size_t d = 0; d < bs.size(); ++d) {
      const auto bm = schur_decompose(bs[d]);
      for (const auto& [lam, k] : bm.mult) {
        CHECK(k >= 0);
        if (k) {
          CHECK(part(lam, 0) <= p - 1);
          max_b1 = std::max(max_b1, part(lam, 0));
        }
      }
    }
    CHECK(max_b1 == p - 1);
    std::vector<SchurMultiplicities> bms;
    for (const auto& b : bs) bms.push_back(schur_decompose(b));
    const auto back = pieri_tensor(bms, 6, n);
    for (int d = 0; d <= 6; ++d) CHECK(back[d] == schur_decompose(fs[d]));
  }
}
