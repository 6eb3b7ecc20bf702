#include "caforge/discriminants.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "caforge/hasse_schmidt.hpp"
#include "caforge/poly_io.hpp"

namespace caforge {

namespace {

MPoly bareiss_det(std::vector<std::vector<MPoly>> m, int nvars, const Field& f) {
  std::size_t dim = m.size();
  if (dim == 0) return MPoly::from_int(nvars, f, 1);
  int sign = 1;
  MPoly prev = MPoly::from_int(nvars, f, 1);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < dim && m[r][k].is_zero()) ++r;
      if (r == dim) return MPoly::zero(nvars, f);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = MPoly::zero(nvars, f);
    }
    prev = m[k][k];
  }
  MPoly det = m[dim - 1][dim - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

MPoly sylvester_resultant(const std::vector<MPoly>& f, const std::vector<MPoly>& g) {
  if (f.empty() || g.empty())
    throw std::invalid_argument("resultant of an empty coefficient list");
  std::size_t n = f.size() - 1, m = g.size() - 1;
  if (n == 0 && m == 0)
    throw std::invalid_argument("resultant of two constants is undefined");
  if (f[n].is_zero() || g[m].is_zero())
    throw std::invalid_argument("declared leading coefficient is zero");
  int nvars = f[0].nvars();
  const Field& k = f[0].field();
  for (const auto& c : f) MPoly::check_compatible(f[0], c);
  for (const auto& c : g) MPoly::check_compatible(f[0], c);

  std::size_t dim = n + m;
  std::vector<std::vector<MPoly>> mat(dim, std::vector<MPoly>(dim, MPoly::zero(nvars, k)));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) mat[r][r + j] = f[n - j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) mat[m + r][r + j] = g[m - j];
  return bareiss_det(std::move(mat), nvars, k);
}

std::vector<long> coefficient_weights(int k) {
  std::vector<long> w(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return w;
}

DiscTable disc_table(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("degree out of range [2,8]");
  Field q = Field::rationals();
  // generic monic f: coefficient of X^j is y_{n-j}, leading 1
  std::vector<MPoly> fc(static_cast<std::size_t>(n + 1), MPoly::zero(n, q));
  fc[static_cast<std::size_t>(n)] = MPoly::from_int(n, q, 1);
  for (int j = 0; j < n; ++j)
    fc[static_cast<std::size_t>(j)] = MPoly::variable(n, q, n - j - 1);

  DiscTable t;
  t.n = n;
  std::vector<long> wfull = coefficient_weights(n);
  std::vector<long> wred = coefficient_weights(n - 1);
  std::vector<int> down(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) down[static_cast<std::size_t>(i)] = i;
  down[static_cast<std::size_t>(n - 1)] = -1;

  for (int i = 1; i < n; ++i) {
    std::vector<MPoly> gic(static_cast<std::size_t>(n - i + 1), MPoly::zero(n, q));
    for (int j = i; j <= n; ++j)
      gic[static_cast<std::size_t>(j - i)] =
          fc[static_cast<std::size_t>(j)].scaled(binomial_in(q, static_cast<unsigned long>(j),
                                                             static_cast<unsigned long>(i)));
    MPoly disc = sylvester_resultant(fc, gic);
    MPoly red = disc.substitute(n - 1, MPoly::zero(n, q)).remap_vars(n - 1, down);

    auto wd = red.weighted_degree(wred);
    long expect = static_cast<long>(n) * (n - i);
    if (wd.kind != MPoly::WDegree::Kind::homogeneous || wd.degree != expect)
      throw std::logic_error("reduced discriminant fails weighted homogeneity");
    for (const auto& term : red.terms())
      if (term.c.rational().get_den() != 1)
        throw std::logic_error("reduced discriminant has non-integer coefficients");
    auto wdf = disc.weighted_degree(wfull);
    if (wdf.kind != MPoly::WDegree::Kind::homogeneous || wdf.degree != expect)
      throw std::logic_error("discriminant fails weighted homogeneity");

    t.entries.push_back(std::move(disc));
    t.reduced.push_back(std::move(red));
  }
  return t;
}

namespace {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t table_hash(const DiscTable& t) {
  std::uint64_t h = fnv1a(std::to_string(t.n));
  for (const auto& p : t.entries) h = fnv1a(serialize(p, RingNames::ys(t.n)), h);
  for (const auto& p : t.reduced) h = fnv1a(serialize(p, RingNames::ys(t.n - 1)), h);
  return h;
}

nlohmann::ordered_json entry_json(const MPoly& p, int n, int i, int ring_vars) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["i"] = i;
  j["weights"] = coefficient_weights(ring_vars);
  auto wd = p.weighted_degree(coefficient_weights(ring_vars));
  j["weighted_degree"] = wd.degree;
  j["poly"] = serialize(p, RingNames::ys(ring_vars));
  return j;
}

std::filesystem::path cache_file(int n) {
  const char* dir = std::getenv("CA_FORGE_CACHE");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("disc_" + std::to_string(n) + ".json");
}

DiscTable load_cache(const std::filesystem::path& path, int n) {
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.at("n").get<int>() != n) throw std::runtime_error("cache file degree mismatch");
  DiscTable t;
  t.n = n;
  Field q = Field::rationals();
  for (const auto& e : j.at("entries"))
    t.entries.push_back(parse_poly(e.at("poly").get<std::string>(), RingNames::ys(n), q));
  for (const auto& e : j.at("reduced"))
    t.reduced.push_back(parse_poly(e.at("poly").get<std::string>(), RingNames::ys(n - 1), q));
  if (t.entries.size() != static_cast<std::size_t>(n - 1) ||
      t.reduced.size() != static_cast<std::size_t>(n - 1))
    throw std::runtime_error("cache file is incomplete");
  std::uint64_t h = j.at("hash").get<std::uint64_t>();
  if (h != table_hash(t))
    throw std::runtime_error("cache file hash mismatch: " + path.string());
  std::vector<long> wred = coefficient_weights(n - 1);
  for (int i = 1; i < n; ++i) {
    auto wd = t.reduced[static_cast<std::size_t>(i - 1)].weighted_degree(wred);
    if (wd.kind != MPoly::WDegree::Kind::homogeneous ||
        wd.degree != static_cast<long>(n) * (n - i))
      throw std::runtime_error("cached table fails weighted homogeneity");
  }
  return t;
}

void store_cache(const std::filesystem::path& path, const DiscTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["entries"] = nlohmann::json::array();
  j["reduced"] = nlohmann::json::array();
  for (int i = 1; i < t.n; ++i) {
    j["entries"].push_back(entry_json(t.entries[static_cast<std::size_t>(i - 1)], t.n, i, t.n));
    j["reduced"].push_back(
        entry_json(t.reduced[static_cast<std::size_t>(i - 1)], t.n, i, t.n - 1));
  }
  j["hash"] = table_hash(t);
  std::ofstream out(path);
  out << j.dump(1) << "\n";
}

}  // namespace

const DiscTable& disc_table_cached(int n) {
  static std::mutex mu;
  static std::map<int, DiscTable> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  std::filesystem::path path = cache_file(n);
  if (!path.empty() && std::filesystem::exists(path))
    return memo.emplace(n, load_cache(path, n)).first->second;

  DiscTable t = disc_table(n);
  if (!path.empty()) store_cache(path, t);
  return memo.emplace(n, std::move(t)).first->second;
}

DiscTable disc_table_regen(int n) {
  DiscTable fresh = disc_table(n);
  std::filesystem::path path = cache_file(n);
  if (!path.empty()) {
    if (std::filesystem::exists(path)) {
      DiscTable cached = load_cache(path, n);
      if (table_hash(cached) != table_hash(fresh))
        throw std::runtime_error("recomputed table disagrees with cache: " + path.string());
    }
    store_cache(path, fresh);
  }
  return fresh;
}

std::vector<MPoly> xn_defining_system(int n) { return disc_table_cached(n).reduced; }

}  // namespace caforge
