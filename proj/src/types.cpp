#include "tsc/types.hpp"

namespace tsc {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::TLLMC: return "tllmc";
    case Variant::TSSC: return "tssc";
    case Variant::TLRR: return "tlrr";
  }
  return "?";
}

Variant variant_from_string(const std::string& name) {
  if (name == "tllmc") return Variant::TLLMC;
  if (name == "tssc") return Variant::TSSC;
  if (name == "tlrr") return Variant::TLRR;
  throw invalid_input("unknown variant: " + name);
}

void Hyperparams::validate() const {
  if (!(lambda > 0.0)) throw invalid_input("Hyperparams: lambda must be positive");
  if (!(mu >= 0.0)) throw invalid_input("Hyperparams: mu must be nonnegative");
  if (!(gamma >= 0.0)) throw invalid_input("Hyperparams: gamma must be nonnegative");
  if (!(mu_c >= 0.0)) throw invalid_input("Hyperparams: mu_c must be nonnegative");
  if (max_outer_iters < 1) throw invalid_input("Hyperparams: max_outer_iters must be >= 1");
  if (!(tol_rel > 0.0)) throw invalid_input("Hyperparams: tol_rel must be positive");
  if (inner_iters < 1) throw invalid_input("Hyperparams: inner_iters must be >= 1");
  if (!(inner_tol > 0.0)) throw invalid_input("Hyperparams: inner_tol must be positive");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace tsc
