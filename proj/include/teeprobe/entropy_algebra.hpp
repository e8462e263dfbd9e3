#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "teeprobe/errors.hpp"
#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

/// c = sum_T a_T.
Rational sum_coeffs(const InfoQuantity& q);

struct ClusterResidue {
  PartySet cluster;
  Rational residue;  // sum of a_T over T containing the cluster
};

/// Balance of all k-clusters for one k.
struct BalanceSlice {
  int k = 0;
  bool balanced = true;
  std::vector<ClusterResidue> violations;  // nonzero residues, canonical order
};

struct BalanceProfile {
  std::vector<BalanceSlice> slices;  // k = 1..n

  /// Largest k such that the quantity is j-balanced for every j <= k (0 if
  /// not even balanced).
  int max_balanced_k() const;
};

/// Throws InputError unless 1 <= k <= n.
BalanceSlice k_balance(const InfoQuantity& q, int k);
BalanceProfile balance_profile(const InfoQuantity& q);

enum class Classification { fixed_topology, fixed_geometry, unbalanced };

std::string_view to_string(Classification c);

/// fixed_topology: 1- and 2-balanced; fixed_geometry: 1- but not 2-balanced.
/// A k-balance condition with k > n holds vacuously.
Classification classify(const InfoQuantity& q);

/// sum_T a_T s(T). Throws InputError when s lacks a term key.
template <class Value>
Value evaluate_on_vector(const InfoQuantity& q, const std::unordered_map<PartySet, Value>& s) {
  Value total{};
  for (const auto& [t, c] : q.terms()) {
    const auto it = s.find(t);
    if (it == s.end()) {
      throw InputError("entropy vector has no value for region {" + [&] {
        std::string out;
        for (const auto& l : q.labels(t)) out += (out.empty() ? "" : ",") + l;
        return out;
      }() + "}");
    }
    if constexpr (std::is_same_v<Value, Rational>) {
      total += c * it->second;
    } else {
      total += static_cast<Value>(c.get_d()) * it->second;
    }
  }
  return total;
}

/// Value on the GHZ entropy vector (S(T) = log 2 for every nonempty T), in
/// units of log 2.
Rational ghz_value(const InfoQuantity& q);

/// Moves the coefficient of T to the image of T under party i -> perm[i].
/// Throws InputError if perm is not a permutation of 0..n-1.
InfoQuantity relabel(const InfoQuantity& q, const std::vector<int>& perm);

/// Label form: old label -> new label; unmentioned parties stay fixed.
InfoQuantity relabel(const InfoQuantity& q, const std::map<std::string, std::string>& mapping);

}  // namespace teeprobe
