#include "teeprobe/entropy_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace teeprobe {

namespace {

using ResidueList = std::vector<ClusterResidue>;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// Calls f on every k-subset of `indices`.
template <class F>
void for_each_subset_of_size(const std::vector<int>& indices, int k, F&& f) {
  const int m = static_cast<int>(indices.size());
  if (k > m) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    PartySet s;
    for (int i : pick) s = s.with(indices[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Nonzero residues for every cluster size in [k_lo, k_hi], grouped by size.
std::vector<ResidueList> nonzero_residues(const InfoQuantity& q, int k_lo, int k_hi) {
  const int n = q.party_count();
  std::vector<ResidueList> out(k_hi - k_lo + 1);

  double sparse_cost = 0.0;
  for (const auto& [t, c] : q.terms()) {
    for (int k = k_lo; k <= k_hi; ++k) sparse_cost += binomial(t.size(), k);
  }
  const double dense_cost = n <= 26 ? n * std::ldexp(1.0, n) : INFINITY;

  if (dense_cost < sparse_cost) {
    // Superset-sum transform over the full 2^n table.
    std::vector<Rational> table(std::size_t{1} << n);
    for (const auto& [t, c] : q.terms()) table[t.bits()] = c;
    for (int bit = 0; bit < n; ++bit) {
      const std::size_t b = std::size_t{1} << bit;
      for (std::size_t s = 0; s < table.size(); ++s) {
        if ((s & b) == 0 && table[s | b] != 0) table[s] += table[s | b];
      }
    }
    for (std::size_t s = 1; s < table.size(); ++s) {
      const int k = std::popcount(s);
      if (k >= k_lo && k <= k_hi && table[s] != 0) {
        out[k - k_lo].push_back({PartySet(s), std::move(table[s])});
      }
    }
  } else {
    std::unordered_map<PartySet, Rational> acc;
    for (const auto& [t, c] : q.terms()) {
      const auto idx = t.indices();
      for (int k = k_lo; k <= std::min<int>(k_hi, idx.size()); ++k) {
        for_each_subset_of_size(idx, k, [&](PartySet s) { acc[s] += c; });
      }
    }
    for (auto& [s, r] : acc) {
      if (r != 0) out[s.size() - k_lo].push_back({s, std::move(r)});
    }
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [](const ClusterResidue& a, const ClusterResidue& b) {
      return CanonicalOrder<PartyTag>{}(a.cluster, b.cluster);
    });
  }
  return out;
}

}  // namespace

Rational sum_coeffs(const InfoQuantity& q) {
  Rational total = 0;
  for (const auto& [t, c] : q.terms()) total += c;
  return total;
}

int BalanceProfile::max_balanced_k() const {
  int k = 0;
  for (const auto& s : slices) {
    if (!s.balanced) break;
    k = s.k;
  }
  return k;
}

BalanceSlice k_balance(const InfoQuantity& q, int k) {
  if (k < 1 || k > q.party_count()) {
    throw InputError("cluster size k=" + std::to_string(k) + " out of range 1.." +
                     std::to_string(q.party_count()));
  }
  auto lists = nonzero_residues(q, k, k);
  BalanceSlice slice{k, lists[0].empty(), std::move(lists[0])};
  return slice;
}

BalanceProfile balance_profile(const InfoQuantity& q) {
  BalanceProfile profile;
  const int n = q.party_count();
  if (n == 0) return profile;
  auto lists = nonzero_residues(q, 1, n);
  for (int k = 1; k <= n; ++k) {
    auto& list = lists[k - 1];
    profile.slices.push_back({k, list.empty(), std::move(list)});
  }
  return profile;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::fixed_topology: return "fixed_topology";
    case Classification::fixed_geometry: return "fixed_geometry";
    case Classification::unbalanced: return "unbalanced";
  }
  return "unknown";
}

Classification classify(const InfoQuantity& q) {
  const int n = q.party_count();
  const int top = std::min(n, 2);
  if (top == 0) return Classification::fixed_topology;
  const auto lists = nonzero_residues(q, 1, top);
  if (!lists[0].empty()) return Classification::unbalanced;
  if (top == 2 && !lists[1].empty()) return Classification::fixed_geometry;
  return Classification::fixed_topology;
}

Rational ghz_value(const InfoQuantity& q) {
  // Every nonempty subsystem of a GHZ state has entropy log 2.
  return sum_coeffs(q);
}

InfoQuantity relabel(const InfoQuantity& q, const std::vector<int>& perm) {
  const int n = q.party_count();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation size differs from party count");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) throw InputError("relabeling is not a bijection on the parties");
    hit[p] = true;
  }
  InfoQuantity out(q.parties(), q.name());
  for (const auto& [t, c] : q.terms()) {
    PartySet image;
    t.for_each([&](int i) { image = image.with(perm[i]); });
    out.add_term(image, c);
  }
  return out;
}

InfoQuantity relabel(const InfoQuantity& q, const std::map<std::string, std::string>& mapping) {
  std::vector<int> perm(q.party_count());
  for (int i = 0; i < q.party_count(); ++i) perm[i] = i;
  for (const auto& [from, to] : mapping) {
    const int a = q.party_index(from);
    const int b = q.party_index(to);
    if (a < 0 || b < 0) throw InputError("relabeling mentions unknown party " + (a < 0 ? from : to));
    perm[a] = b;
  }
  return relabel(q, perm);
}

}  // namespace teeprobe
