#include "gtbasis/clifford.hpp"

#include <string>

namespace gtbasis {

BladeProduct blade_product(Blade a, Blade b, int dim) {
  if (dim < 0 || dim > kMaxDim) throw DomainError("Clifford dimension out of range");
  if ((a.mask >> dim) != 0 || (b.mask >> dim) != 0) {
    throw DomainError("blade mask exceeds algebra dimension");
  }
  // Moving each generator of b leftwards past the larger generators of a.
  int swaps = 0;
  for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
    std::uint32_t bit = rest & (~rest + 1);
    std::uint32_t above = ~((bit << 1) - 1);
    swaps += std::popcount(a.mask & above);
  }
  int contractions = std::popcount(a.mask & b.mask);
  int sign = ((swaps + contractions) % 2 == 0) ? 1 : -1;
  return {sign, Blade{a.mask ^ b.mask}};
}

MultivectorF to_float(const Multivector& a) {
  std::vector<MultivectorF::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [blade, c] : a.terms()) terms.emplace_back(blade, c.to_complex());
  return MultivectorF::from_terms(a.dim(), std::move(terms));
}

std::string blade_name(Blade b) {
  if (b.is_scalar()) return "1";
  std::string out = "e";
  for (int j = 0; j < 32; ++j) {
    if (b.mask & (1u << j)) out += std::to_string(j + 1);
  }
  return out;
}

}  // namespace gtbasis
