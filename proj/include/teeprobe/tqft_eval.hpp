#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "teeprobe/anyon.hpp"
#include "teeprobe/arrangement.hpp"
#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

/// c_logD * log D + c_K * K, exactly.
struct SymEntropy {
  Rational c_logD;
  Rational c_K;

  SymEntropy& operator+=(const SymEntropy& o) {
    c_logD += o.c_logD;
    c_K += o.c_K;
    return *this;
  }
  SymEntropy& operator-=(const SymEntropy& o) {
    c_logD -= o.c_logD;
    c_K -= o.c_K;
    return *this;
  }
  SymEntropy& operator*=(const Rational& f) {
    c_logD *= f;
    c_K *= f;
    return *this;
  }
  friend SymEntropy operator+(SymEntropy a, const SymEntropy& b) { return a += b; }
  friend SymEntropy operator-(SymEntropy a, const SymEntropy& b) { return a -= b; }
  friend SymEntropy operator*(SymEntropy a, const Rational& f) { return a *= f; }
  friend SymEntropy operator*(const Rational& f, SymEntropy a) { return a *= f; }
  friend bool operator==(const SymEntropy& a, const SymEntropy& b) {
    return a.c_logD == b.c_logD && a.c_K == b.c_K;
  }
};

/// "2 logD - K", "0", ...
std::string to_string(const SymEntropy& v);

/// Entropy of a sphere with k punctures: 2(k-1) logD - k K for k >= 2 and 0
/// for k in {0, 1}. Throws InputError for negative k.
SymEntropy sphere_entropy_symbolic(int k);

enum class EvalMode { paper, additive };

std::string_view to_string(EvalMode m);
/// "paper" or "additive"; throws InputError otherwise.
EvalMode parse_eval_mode(std::string_view s);

struct EvalOptions {
  EvalMode mode = EvalMode::paper;
  /// Reject unions with a component bounded by more than one circuit.
  bool strict = false;
};

struct TallyTerm {
  std::vector<std::string> region;
  Rational coeff;
  std::vector<int> spheres;  // puncture count of each sphere
};

/// S(X) = 1/2 sum over spheres; the tally records which spheres appear.
struct Tally {
  std::vector<TallyTerm> terms;  // term order of the quantity
  std::map<int, Rational> positive;  // k -> total positive weight of S_k
  std::map<int, Rational> negative;  // k -> total |weight| of negative S_k
  std::map<int, Rational> net() const;
};

/// "(1/2)[3 S_7 + 2 S_6 - 3 S_6 - 3 S_5]"
std::string to_string(const Tally& t);

/// Substitutes the punctured-sphere entropy for every term. Each party must be
/// an internal face of the (valid) arrangement. Strict mode throws
/// UnsupportedGeometry for unions with holes.
SymEntropy eval_tqft(const InfoQuantity& q, const Arrangement& a, const EvalOptions& options = {},
                     Tally* tally = nullptr);

/// alpha * sum_e length_coeffs[e] l_e + c_gamma * gamma.
struct AreaLawExpr {
  std::map<int, Rational> length_coeffs;  // edge id -> coefficient, zeros dropped
  Rational c_gamma;

  bool lengths_vanish() const { return length_coeffs.empty(); }
};

std::string to_string(const AreaLawExpr& v, const Arrangement& a);

/// S(X) = alpha |boundary of X| - b0(boundary of X) gamma.
AreaLawExpr eval_area_law(const InfoQuantity& q, const Arrangement& a);

struct TopologicalCheck {
  bool topological = false;
  /// Paper mode only: value equals -sum_coeffs(q) logD. Empty otherwise.
  std::optional<bool> sum_rule;
  std::optional<SymEntropy> tqft;
  std::optional<AreaLawExpr> area_law;
};

/// TQFT modes: c_K == 0. Area law: every length coefficient vanishes.
TopologicalCheck topological_check(const InfoQuantity& q, const Arrangement& a, const EvalOptions& options);
TopologicalCheck topological_check_area_law(const InfoQuantity& q, const Arrangement& a);

/// c_logD log D + c_K K for the model (natural log).
double evaluate_numeric(const SymEntropy& v, const AnyonModel& m);
double evaluate_numeric(const SymEntropy& v, const DerivedScalars& s);

nlohmann::json to_json(const SymEntropy& v);
nlohmann::json to_json(const Tally& t);
nlohmann::json to_json(const AreaLawExpr& v, const Arrangement& a);

}  // namespace teeprobe
