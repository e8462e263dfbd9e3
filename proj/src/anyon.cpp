#include "teeprobe/anyon.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

constexpr std::uint64_t kMaxTuples = 20'000'000;

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

AnyonModel::AnyonModel(std::string name, std::vector<std::string> labels, std::vector<double> dims,
                       std::vector<int> fusion)
    : name_(std::move(name)), labels_(std::move(labels)), dims_(std::move(dims)), fusion_(std::move(fusion)) {
  const std::size_t r = labels_.size();
  if (r == 0) throw InputError("anyon model needs at least one label");
  if (dims_.size() != r) throw InputError("anyon model: dims has " + std::to_string(dims_.size()) +
                                          " entries for " + std::to_string(r) + " labels");
  if (fusion_.size() != r * r * r) throw InputError("anyon model: fusion tensor must be rank^3");
  for (int n : fusion_) {
    if (n < 0) throw InputError("anyon model: negative fusion multiplicity");
  }
  for (double d : dims_) {
    if (!std::isfinite(d) || d <= 0) throw InputError("anyon model: dimensions must be positive");
  }
}

ModelReport validate_model(const AnyonModel& m) {
  ModelReport rep;
  auto& out = rep.violations;
  const int r = m.rank();
  const auto& L = m.labels();
  const auto& d = m.dims();

  if (std::abs(d[0] - 1.0) > kModelTolerance) out.push_back("vacuum dimension is not 1");
  for (int a = 1; a < r; ++a) {
    if (d[a] < 1.0 - kModelTolerance) out.push_back("dimension of " + L[a] + " is below 1");
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      const int expect = a == b ? 1 : 0;
      if (m.fusion(0, a, b) != expect || m.fusion(a, 0, b) != expect) {
        out.push_back("vacuum does not act as identity on " + L[a]);
        break;
      }
    }
  }
  for (int a = 0; a < r; ++a) {
    int conjugates = 0;
    bool bad_multiplicity = false;
    for (int b = 0; b < r; ++b) {
      const int n = m.fusion(a, b, 0);
      if (n > 0) ++conjugates;
      if (n > 1) bad_multiplicity = true;
    }
    if (conjugates != 1 || bad_multiplicity) out.push_back(L[a] + " has no unique conjugate");
  }
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      double s = 0;
      for (int c = 0; c < r; ++c) s += m.fusion(a, b, c) * d[c];
      if (std::abs(s - d[a] * d[b]) > kModelTolerance) {
        std::ostringstream os;
        os << "dimension inconsistency: " << L[a] << " x " << L[b] << " gives " << s << ", expected "
           << d[a] * d[b];
        out.push_back(os.str());
      }
    }
  }
  for (int a = 0; a < r && !rep.associativity_witness; ++a) {
    for (int b = 0; b < r && !rep.associativity_witness; ++b) {
      for (int c = 0; c < r && !rep.associativity_witness; ++c) {
        for (int x = 0; x < r; ++x) {
          long long lhs = 0, rhs = 0;
          for (int e = 0; e < r; ++e) {
            lhs += static_cast<long long>(m.fusion(a, b, e)) * m.fusion(e, c, x);
            rhs += static_cast<long long>(m.fusion(b, c, e)) * m.fusion(a, e, x);
          }
          if (lhs != rhs) {
            rep.associativity_witness = std::array<int, 4>{a, b, c, x};
            out.push_back("fusion is not associative at (" + L[a] + ", " + L[b] + ", " + L[c] + ", " + L[x] + ")");
            break;
          }
        }
      }
    }
  }
  return rep;
}

void require_valid(const AnyonModel& m) {
  const auto rep = validate_model(m);
  if (!rep.valid()) throw InputError("invalid anyon model " + m.name() + ": " + join(rep.violations, "; "));
}

namespace {

AnyonModel abelian(std::string name, std::vector<std::string> labels, const std::vector<int>& product) {
  const int r = static_cast<int>(labels.size());
  std::vector<int> fusion(r * r * r, 0);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) fusion[(a * r + b) * r + product[a * r + b]] = 1;
  }
  return AnyonModel(std::move(name), std::move(labels), std::vector<double>(r, 1.0), std::move(fusion));
}

std::optional<int> parse_cyclic_order(std::string_view name) {
  if (name.starts_with("Z_")) {
    name.remove_prefix(2);
  } else if (name.starts_with("Z")) {
    name.remove_prefix(1);
  } else {
    return std::nullopt;
  }
  if (const auto paren = name.find('('); paren != std::string_view::npos) {
    if (name.back() != ')') return std::nullopt;
    std::string_view level = name.substr(paren + 1, name.size() - paren - 2);
    int k = 0;
    const auto [p, ec] = std::from_chars(level.data(), level.data() + level.size(), k);
    if (level.empty() || ec != std::errc{} || p != level.data() + level.size()) return std::nullopt;
    name = name.substr(0, paren);
  }
  int n = 0;
  const auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), n);
  if (name.empty() || ec != std::errc{} || p != name.data() + name.size()) return std::nullopt;
  return n;
}

}  // namespace

AnyonModel builtin_model(std::string_view name) {
  if (name == "trivial") return AnyonModel("trivial", {"1"}, {1.0}, {1});
  if (name == "toric") {
    std::vector<int> product(16);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) product[a * 4 + b] = a ^ b;
    }
    return abelian("toric", {"1", "e", "m", "em"}, product);
  }
  if (name == "fibonacci") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<int> fusion(8, 0);
    auto N = [&](int a, int b, int c) -> int& { return fusion[(a * 2 + b) * 2 + c]; };
    N(0, 0, 0) = N(0, 1, 1) = N(1, 0, 1) = 1;
    N(1, 1, 0) = N(1, 1, 1) = 1;
    return AnyonModel("fibonacci", {"1", "tau"}, {1.0, phi}, std::move(fusion));
  }
  if (name == "ising") {
    std::vector<int> fusion(27, 0);
    auto N = [&](int a, int b, int c) -> int& { return fusion[(a * 3 + b) * 3 + c]; };
    for (int a = 0; a < 3; ++a) N(0, a, a) = N(a, 0, a) = 1;
    N(1, 1, 0) = N(1, 1, 2) = 1;  // sigma x sigma = 1 + psi
    N(1, 2, 1) = N(2, 1, 1) = 1;
    N(2, 2, 0) = 1;
    return AnyonModel("ising", {"1", "sigma", "psi"}, {1.0, std::sqrt(2.0), 1.0}, std::move(fusion));
  }
  if (const auto n = parse_cyclic_order(name)) {
    if (*n < 1 || *n > 64) throw InputError("Z_n requires 1 <= n <= 64");
    std::vector<std::string> labels;
    for (int a = 0; a < *n; ++a) labels.push_back(std::to_string(a));
    std::vector<int> product(*n * *n);
    for (int a = 0; a < *n; ++a) {
      for (int b = 0; b < *n; ++b) product[a * *n + b] = (a + b) % *n;
    }
    return abelian(std::string(name), std::move(labels), product);
  }
  throw InputError("unknown anyon model '" + std::string(name) + "' (expected " +
                   join(builtin_model_names(), ", ") + ")");
}

std::vector<std::string> builtin_model_names() { return {"trivial", "toric", "Z_n(k)", "fibonacci", "ising"}; }

AnyonModel resolve_model(std::string_view ref) {
  const std::filesystem::path path{std::string(ref)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("cannot parse model file " + path.string() + ": " + e.what());
    }
    return model_from_json(j, path.stem().string());
  }
  return builtin_model(ref);
}

DerivedScalars derived_scalars(const AnyonModel& m) {
  require_valid(m);
  DerivedScalars s;
  double d2 = 0;
  for (double d : m.dims()) d2 += d * d;
  s.D = std::sqrt(d2);
  s.log_D = 0.5 * std::log(d2);
  for (double d : m.dims()) {
    const double p = d * d / d2;
    s.P.push_back(p);
    s.K += p * std::log(d);
  }
  return s;
}

double closed_form_entropy(const AnyonModel& m, int k) {
  if (k < 0) throw InputError("puncture count must be nonnegative");
  if (k <= 1) return 0.0;
  const auto s = derived_scalars(m);
  return 2.0 * (k - 1) * s.log_D - k * s.K;
}

OracleResult brute_force_entropy(const AnyonModel& m, int k, int k_max) {
  if (k < 1) throw InputError("oracle needs at least one puncture");
  if (k > k_max) {
    throw InputError("puncture count " + std::to_string(k) + " exceeds k_max = " + std::to_string(k_max));
  }
  const auto scalars = derived_scalars(m);
  const int r = m.rank();
  const double tuples = std::pow(static_cast<double>(r), k);
  if (tuples > static_cast<double>(kMaxTuples)) {
    throw InputError("enumeration of " + std::to_string(r) + "^" + std::to_string(k) + " tuples is too large");
  }

  OracleResult res;
  res.k = k;
  res.closed_form = closed_form_entropy(m, k);
  res.marginals.assign(k, std::vector<double>(r, 0.0));
  const double norm = std::pow(scalars.D, 2.0 * (k - 1));

  // Depth-first over tuples; state[level] is the fusion-channel vector of the
  // first level+1 labels.
  std::vector<std::vector<long long>> state(k, std::vector<long long>(r, 0));
  std::vector<double> dims_product(k, 1.0);
  std::vector<int> tuple(k, 0);
  auto enter = [&](int level) {
    const int a = tuple[level];
    auto& v = state[level];
    if (level == 0) {
      std::fill(v.begin(), v.end(), 0);
      v[a] = 1;
      dims_product[0] = m.dims()[a];
      return;
    }
    const auto& prev = state[level - 1];
    for (int c = 0; c < r; ++c) {
      long long s = 0;
      for (int b = 0; b < r; ++b) {
        if (prev[b] != 0) s += prev[b] * m.fusion(b, a, c);
      }
      v[c] = s;
    }
    dims_product[level] = dims_product[level - 1] * m.dims()[a];
  };

  for (int level = 0; level < k; ++level) enter(level);
  while (true) {
    ++res.tuples;
    const long long n = state[k - 1][0];
    if (n > 0) {
      ++res.charge_neutral;
      const double p = static_cast<double>(n) * dims_product[k - 1] / norm;
      res.entropy -= p * std::log(p / static_cast<double>(n));
      res.total_probability += p;
      for (int i = 0; i < k; ++i) res.marginals[i][tuple[i]] += p;
    }
    int level = k - 1;
    while (level >= 0 && tuple[level] == r - 1) --level;
    if (level < 0) break;
    ++tuple[level];
    for (int i = level + 1; i < k; ++i) tuple[i] = 0;
    for (int i = level; i < k; ++i) enter(i);
  }
  if (res.entropy == 0.0) res.entropy = 0.0;  // normalise -0
  return res;
}

double brute_force_value(const AnyonModel& m, int k, int k_max) { return brute_force_entropy(m, k, k_max).entropy; }

nlohmann::json to_json(const AnyonModel& m) {
  const int r = m.rank();
  nlohmann::json fusion = nlohmann::json::array();
  for (int a = 0; a < r; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < r; ++b) {
      std::vector<int> col;
      for (int c = 0; c < r; ++c) col.push_back(m.fusion(a, b, c));
      row.push_back(col);
    }
    fusion.push_back(row);
  }
  return {{"name", m.name()}, {"labels", m.labels()}, {"dims", m.dims()}, {"fusion", fusion}};
}

AnyonModel model_from_json(const nlohmann::json& j, std::string fallback_name) {
  try {
    if (!j.is_object()) throw InputError("model JSON must be an object");
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto dims = j.at("dims").get<std::vector<double>>();
    const std::size_t r = labels.size();
    const auto& jf = j.at("fusion");
    std::vector<int> fusion;
    if (!jf.is_array() || jf.size() != r) throw InputError("model JSON: fusion must be a rank x rank x rank array");
    for (const auto& row : jf) {
      if (!row.is_array() || row.size() != r) {
        throw InputError("model JSON: fusion must be a rank x rank x rank array");
      }
      for (const auto& col : row) {
        const auto v = col.get<std::vector<int>>();
        if (v.size() != r) throw InputError("model JSON: fusion must be a rank x rank x rank array");
        fusion.insert(fusion.end(), v.begin(), v.end());
      }
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::move(fallback_name);
    return AnyonModel(std::move(name), std::move(labels), std::move(dims), std::move(fusion));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model JSON: ") + e.what());
  }
}

}  // namespace teeprobe
