#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace teeprobe {

inline constexpr double kModelTolerance = 1e-9;

/// Anyon labels, quantum dimensions and fusion multiplicities N_ab^c. The
/// first label is the vacuum. Shape is checked on construction; the algebraic
/// axioms are checked by validate_model.
class AnyonModel {
 public:
  AnyonModel() = default;
  AnyonModel(std::string name, std::vector<std::string> labels, std::vector<double> dims, std::vector<int> fusion);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& dims() const noexcept { return dims_; }
  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  int fusion(int a, int b, int c) const { return fusion_[(a * rank() + b) * rank() + c]; }
  const std::vector<int>& fusion_tensor() const noexcept { return fusion_; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<double> dims_;
  std::vector<int> fusion_;  // [a][b][c] flattened
};

struct ModelReport {
  bool valid() const { return violations.empty(); }
  std::vector<std::string> violations;
  std::optional<std::array<int, 4>> associativity_witness;  // (a,b,c,d)
};

/// Vacuum identity, unique conjugates, dimension consistency and
/// associativity, all within kModelTolerance.
ModelReport validate_model(const AnyonModel& m);
/// Throws InputError listing the violations.
void require_valid(const AnyonModel& m);

/// trivial, toric, fibonacci, ising, Z_n / Z_n(k) / Zn.
AnyonModel builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();

/// Builtin name, or path to a model JSON file.
AnyonModel resolve_model(std::string_view ref);

struct DerivedScalars {
  double D = 1;
  double log_D = 0;
  double K = 0;  // sum_a P_a log d_a
  std::vector<double> P;  // d_a^2 / D^2
};

DerivedScalars derived_scalars(const AnyonModel& m);

/// 2(k-1) log D - k K for k >= 2, 0 for k in {0, 1}.
double closed_form_entropy(const AnyonModel& m, int k);

struct OracleResult {
  int k = 0;
  double entropy = 0;
  double closed_form = 0;
  double total_probability = 0;
  std::uint64_t tuples = 0;
  std::uint64_t charge_neutral = 0;
  std::vector<std::vector<double>> marginals;  // [puncture][label]
};

/// Enumerates every k-tuple of labels, weights the vacuum channel by
/// N * prod(d) / D^(2(k-1)) and sums -P log(P/N) over the fusion
/// multiplicity. Throws InputError for k outside 1..k_max or an infeasible
/// enumeration size.
OracleResult brute_force_entropy(const AnyonModel& m, int k, int k_max = 8);
double brute_force_value(const AnyonModel& m, int k, int k_max = 8);

/// {"name", "labels", "dims", "fusion": N[a][b][c]}
nlohmann::json to_json(const AnyonModel& m);
AnyonModel model_from_json(const nlohmann::json& j, std::string fallback_name = {});

}  // namespace teeprobe
