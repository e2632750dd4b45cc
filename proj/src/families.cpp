// Group constructors: catalog families, the SNNC semidirect-product
// realization, permutation closures and the spec-string grammar.

#include "gg/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace gg {

namespace {

using Table = std::vector<std::uint16_t>;

std::string power_label(const std::string& gen, long long e) {
  if (e == 0) return "";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

std::string pair_power_label(const std::string& ga, long long ea, const std::string& gb,
                             long long eb) {
  const std::string s = power_label(ga, ea) + power_label(gb, eb);
  return s.empty() ? "e" : s;
}

long long modinv(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    const long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw Error("modinv: arguments not coprime");
  return t < 0 ? t + m : t;
}

}  // namespace

// ---- permutation helpers ----

std::vector<int> parse_cycle_string(const std::string& text, int degree) {
  std::vector<int> perm(static_cast<std::size_t>(degree));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> used(std::size_t(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree), i);
      if (used[std::size_t(v - 1)])
        throw ParseError("point " + std::to_string(v) + " repeated; cycles must be disjoint", i);
      used[std::size_t(v - 1)] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      perm[std::size_t(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == int(s)) continue;
    out += "(";
    std::size_t cur = s;
    bool first = true;
    do {
      if (!first) out += " ";
      first = false;
      out += std::to_string(cur + 1);
      seen[cur] = 1;
      cur = std::size_t(perm[cur]);
    } while (cur != s);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

CayleyGroup from_permutations(int degree, const std::vector<std::string>& generator_cycles,
                              const std::string& name, const ValidateOptions& opts) {
  if (degree < 1) throw BadParameter("permutation degree must be >= 1");
  std::vector<std::vector<int>> gens;
  gens.reserve(generator_cycles.size());
  for (const auto& s : generator_cycles) gens.push_back(parse_cycle_string(s, degree));

  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);

  // BFS closure; discovery order fixes the element indexing.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index.emplace(id, 0);
  elems.push_back(id);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      std::vector<int> prod(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) prod[std::size_t(i)] = elems[head][std::size_t(gen[std::size_t(i)])];
      if (index.emplace(prod, int(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (int(elems.size()) > opts.order_cap)
          throw OrderLimitExceeded("permutation closure exceeds cap " +
                                   std::to_string(opts.order_cap));
      }
    }
  }

  const std::size_t n = elems.size();
  Table table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> prod(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) prod[std::size_t(i)] = elems[a][std::size_t(elems[b][std::size_t(i)])];
      table[a * n + b] = std::uint16_t(index.at(prod));
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));

  std::string gname = name;
  if (gname.empty()) {
    std::ostringstream os;
    os << "perm" << degree << "<";
    for (std::size_t i = 0; i < generator_cycles.size(); ++i)
      os << (i ? "," : "") << generator_cycles[i];
    os << ">";
    gname = os.str();
  }
  return CayleyGroup(gname, int(n), std::move(table), std::move(labels), {}, opts);
}

CayleyGroup from_cayley_table(int order, const std::vector<std::vector<int>>& table,
                              const std::vector<std::string>& labels, const std::string& name,
                              const ValidateOptions& opts) {
  if (order <= 0) throw BadShape("order must be positive");
  if (int(table.size()) != order)
    throw BadShape("table has " + std::to_string(table.size()) + " rows, expected " +
                   std::to_string(order));
  Table flat(std::size_t(order) * std::size_t(order));
  for (int r = 0; r < order; ++r) {
    if (int(table[std::size_t(r)].size()) != order)
      throw BadShape("row " + std::to_string(r) + " has " +
                     std::to_string(table[std::size_t(r)].size()) + " entries, expected " +
                     std::to_string(order));
    for (int c = 0; c < order; ++c) {
      const int v = table[std::size_t(r)][std::size_t(c)];
      if (v < 0 || v >= order)
        throw BadShape("entry " + std::to_string(v) + " out of range at (" + std::to_string(r) +
                       "," + std::to_string(c) + ")");
      flat[std::size_t(r) * std::size_t(order) + std::size_t(c)] = std::uint16_t(v);
    }
  }
  return CayleyGroup(name, order, std::move(flat), labels, {}, opts);
}

// ---- families ----

CayleyGroup make_cyclic(int n, const ValidateOptions& opts) {
  if (n < 1) throw BadParameter("cyclic(n) needs n >= 1");
  const std::size_t un = std::size_t(n);
  Table table(un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) table[i * un + j] = std::uint16_t((i + j) % un);
  std::vector<std::string> labels;
  labels.reserve(un);
  for (std::size_t i = 0; i < un; ++i) labels.push_back(i == 0 ? "e" : power_label("g", (long long)i));
  std::map<std::string, Elem> gens;
  if (n > 1) gens["g"] = 1;
  return CayleyGroup("C" + std::to_string(n), n, std::move(table), std::move(labels),
                     std::move(gens), opts);
}

CayleyGroup make_dihedral(int n, const ValidateOptions& opts) {
  if (n < 1) throw BadParameter("dihedral(n) needs n >= 1 (order 2n)");
  const std::size_t un = std::size_t(n);
  const std::size_t sz = 2 * un;
  // element (i,j) = r^i s^j, index j*n + i
  Table table(sz * sz);
  auto idx = [&](long long i, long long j) { return std::size_t(j) * un + std::size_t(i); };
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < n; ++i)
      for (long long j2 = 0; j2 < 2; ++j2)
        for (long long i2 = 0; i2 < n; ++i2) {
          const long long ri = ((j ? i - i2 : i + i2) % n + n) % n;
          table[idx(i, j) * sz + idx(i2, j2)] = std::uint16_t(idx(ri, (j + j2) % 2));
        }
  std::vector<std::string> labels(sz);
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < n; ++i)
      labels[idx(i, j)] = j == 0 ? (i == 0 ? "e" : power_label("r", i))
                                 : (i == 0 ? "s" : power_label("r", i) + "s");
  std::map<std::string, Elem> gens;
  if (n > 1) gens["r"] = Elem(idx(1, 0));
  gens["s"] = Elem(idx(0, 1));
  return CayleyGroup("D" + std::to_string(n), int(sz), std::move(table), std::move(labels),
                     std::move(gens), opts);
}

CayleyGroup make_generalized_quaternion(int m, const ValidateOptions& opts) {
  if (m < 3) throw BadParameter("generalized_quaternion(m) needs m >= 3 (order 2^m)");
  const long long half = ipow(2, m - 1);
  const std::size_t sz = std::size_t(2 * half);
  // (i,j) = a^i b^j with |a| = 2^(m-1), b^2 = a^(2^(m-2)), b a b^-1 = a^-1
  Table table(sz * sz);
  auto idx = [&](long long i, long long j) { return std::size_t(j) * std::size_t(half) + std::size_t(i); };
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < half; ++i)
      for (long long j2 = 0; j2 < 2; ++j2)
        for (long long i2 = 0; i2 < half; ++i2) {
          long long ri = j ? i - i2 : i + i2;
          long long rj = j + j2;
          if (rj == 2) {  // b^2 = a^(half/2)
            rj = 0;
            ri += half / 2;
          }
          ri = (ri % half + half) % half;
          table[idx(i, j) * sz + idx(i2, j2)] = std::uint16_t(idx(ri, rj));
        }
  std::vector<std::string> labels(sz);
  for (long long j = 0; j < 2; ++j)
    for (long long i = 0; i < half; ++i) labels[idx(i, j)] = pair_power_label("a", i, "b", j);
  std::map<std::string, Elem> gens{{"a", Elem(idx(1, 0))}, {"b", Elem(idx(0, 1))}};
  return CayleyGroup("Q" + std::to_string(2 * half), int(sz), std::move(table), std::move(labels),
                     std::move(gens), opts);
}

namespace {

bool perm_is_even(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  int transpositions = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::size_t cur = s;
    do {
      seen[cur] = 1;
      cur = std::size_t(p[cur]);
      ++len;
    } while (cur != s);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

CayleyGroup perm_enumeration_group(int degree, bool even_only, const std::string& name,
                                   const ValidateOptions& opts) {
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  do {
    if (even_only && !perm_is_even(p)) continue;
    index.emplace(p, int(elems.size()));
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = elems.size();
  Table table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> prod(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i)
        prod[std::size_t(i)] = elems[a][std::size_t(elems[b][std::size_t(i)])];
      table[a * n + b] = std::uint16_t(index.at(prod));
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(cycle_notation(e));
  return CayleyGroup(name, int(n), std::move(table), std::move(labels), {}, opts);
}

}  // namespace

CayleyGroup make_symmetric(int n, const ValidateOptions& opts) {
  if (n < 1 || n > 7) throw BadParameter("symmetric(n) needs 1 <= n <= 7");
  return perm_enumeration_group(n, false, "S" + std::to_string(n), opts);
}

CayleyGroup make_alternating(int n, const ValidateOptions& opts) {
  if (n < 2 || n > 7) throw BadParameter("alternating(n) needs 2 <= n <= 7");
  return perm_enumeration_group(n, true, "A" + std::to_string(n), opts);
}

CayleyGroup make_elementary_abelian(int p, int k, const ValidateOptions& opts) {
  if (!is_prime(p)) throw BadParameter("elementary_abelian(p,k): p must be prime");
  if (k < 1) throw BadParameter("elementary_abelian(p,k): k must be >= 1");
  const long long size = ipow(p, k);
  if (size > opts.order_cap)
    throw OrderLimitExceeded("elementary_abelian order " + std::to_string(size) + " exceeds cap");
  const std::size_t n = std::size_t(size);
  Table table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      long long r = 0, pw = 1;
      long long x = (long long)a, y = (long long)b;
      for (int c = 0; c < k; ++c) {
        r += ((x + y) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      table[a * n + b] = std::uint16_t(r);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    long long x = (long long)a;
    for (int c = 0; c < k; ++c) {
      if (c) s += ",";
      s += std::to_string(x % p);
      x /= p;
    }
    labels.push_back(s + ")");
  }
  return CayleyGroup("EA(" + std::to_string(p) + "," + std::to_string(k) + ")", int(n),
                     std::move(table), std::move(labels), {}, opts);
}

CayleyGroup make_heisenberg(int p, const ValidateOptions& opts) {
  if (!is_prime(p) || p == 2) throw BadParameter("heisenberg(p): p must be an odd prime");
  const long long size = (long long)p * p * p;
  if (size > opts.order_cap)
    throw OrderLimitExceeded("heisenberg order " + std::to_string(size) + " exceeds cap");
  const std::size_t n = std::size_t(size);
  // (x,y,z) = [[1,x,z],[0,1,y],[0,0,1]]; index x + p*y + p^2*z
  auto idx = [&](long long x, long long y, long long z) {
    return std::size_t(x + p * y + (long long)p * p * z);
  };
  Table table(n * n);
  for (long long z = 0; z < p; ++z)
    for (long long y = 0; y < p; ++y)
      for (long long x = 0; x < p; ++x)
        for (long long z2 = 0; z2 < p; ++z2)
          for (long long y2 = 0; y2 < p; ++y2)
            for (long long x2 = 0; x2 < p; ++x2)
              table[idx(x, y, z) * n + idx(x2, y2, z2)] =
                  std::uint16_t(idx((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p));
  std::vector<std::string> labels(n);
  for (long long z = 0; z < p; ++z)
    for (long long y = 0; y < p; ++y)
      for (long long x = 0; x < p; ++x)
        labels[idx(x, y, z)] = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")";
  std::map<std::string, Elem> gens{{"a", Elem(idx(1, 0, 0))}, {"b", Elem(idx(0, 1, 0))}};
  return CayleyGroup("Heis(" + std::to_string(p) + ")", int(n), std::move(table),
                     std::move(labels), std::move(gens), opts);
}

CayleyGroup make_special_linear2(int p, const ValidateOptions& opts) {
  if (!is_prime(p) || p > 7) throw BadParameter("special_linear(2,p): p must be a prime <= 7");
  struct Mat {
    int a, b, c, d;
  };
  std::vector<Mat> elems;
  // identity first, remaining matrices in lexicographic order
  elems.push_back({1, 0, 0, 1});
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          elems.push_back({a, b, c, d});
        }
  const std::size_t n = elems.size();
  std::vector<int> lookup(std::size_t(p) * std::size_t(p) * std::size_t(p) * std::size_t(p), -1);
  auto key = [&](const Mat& m) {
    return std::size_t(((m.a * p + m.b) * p + m.c) * p + m.d);
  };
  for (std::size_t i = 0; i < n; ++i) lookup[key(elems[i])] = int(i);
  Table table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat &m = elems[i], &o = elems[j];
      const Mat prod{(m.a * o.a + m.b * o.c) % p, (m.a * o.b + m.b * o.d) % p,
                     (m.c * o.a + m.d * o.c) % p, (m.c * o.b + m.d * o.d) % p};
      table[i * n + j] = std::uint16_t(lookup[key(prod)]);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& m : elems) {
    std::ostringstream os;
    os << "[" << m.a << " " << m.b << ";" << m.c << " " << m.d << "]";
    labels.push_back(os.str());
  }
  return CayleyGroup("SL(2," + std::to_string(p) + ")", int(n), std::move(table),
                     std::move(labels), {}, opts);
}

CayleyGroup make_direct_product(const CayleyGroup& a, const CayleyGroup& b,
                                const ValidateOptions& opts) {
  const long long size = (long long)a.order() * b.order();
  if (size > opts.order_cap)
    throw OrderLimitExceeded("direct product order " + std::to_string(size) + " exceeds cap");
  const std::size_t n = std::size_t(size);
  const std::size_t nb = std::size_t(b.order());
  Table table(n * n);
  for (std::size_t xa = 0; xa < std::size_t(a.order()); ++xa)
    for (std::size_t xb = 0; xb < nb; ++xb)
      for (std::size_t ya = 0; ya < std::size_t(a.order()); ++ya)
        for (std::size_t yb = 0; yb < nb; ++yb)
          table[(xa * nb + xb) * n + (ya * nb + yb)] =
              std::uint16_t(std::size_t(a.mul(Elem(xa), Elem(ya))) * nb +
                            std::size_t(b.mul(Elem(xb), Elem(yb))));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t xa = 0; xa < std::size_t(a.order()); ++xa)
    for (std::size_t xb = 0; xb < nb; ++xb)
      labels.push_back("(" + a.label(Elem(xa)) + "," + b.label(Elem(xb)) + ")");
  return CayleyGroup("x(" + a.name() + "," + b.name() + ")", int(n), std::move(table),
                     std::move(labels), {}, opts);
}

CayleyGroup make_snnc(const SnncParams& params, const ValidateOptions& opts) {
  const auto [p, alpha, beta] = params;
  if (!is_prime(p)) throw BadParameter("snnc: p must be prime");
  if (!(alpha >= beta && beta >= 1))
    throw BadParameter("snnc: parameters must satisfy alpha >= beta >= 1");
  if (p == 2 && alpha == beta && alpha == 1)
    throw BadParameter("snnc: (p,alpha,beta)=(2,1,1) is excluded (it presents D4, not an "
                       "SNNC group; use Q8 instead)");
  const long long size = ipow(p, alpha + beta + 1);
  if (size > opts.order_cap)
    throw OrderLimitExceeded("snnc order " + std::to_string(size) + " exceeds cap " +
                             std::to_string(opts.order_cap));

  const long long M = ipow(p, alpha + 1);  // |a|
  const long long B = ipow(p, beta);       // |b|
  // Realized as <a> x| <b> with b a b^-1 = a^v, v = (1+p^alpha)^-1 mod p^(alpha+1),
  // so that [a,b] = a^-1 b^-1 a b = a^(p^alpha) holds with the library convention.
  const long long v = modinv(1 + ipow(p, alpha), M);
  std::vector<long long> vpow(static_cast<std::size_t>(B));
  vpow[0] = 1;
  for (std::size_t j = 1; j < std::size_t(B); ++j) vpow[j] = (vpow[j - 1] * v) % M;

  const std::size_t n = std::size_t(size);
  auto idx = [&](long long i, long long j) { return std::size_t(j * M + i); };
  Table table(n * n);
  for (long long j = 0; j < B; ++j)
    for (long long i = 0; i < M; ++i)
      for (long long j2 = 0; j2 < B; ++j2)
        for (long long i2 = 0; i2 < M; ++i2)
          table[idx(i, j) * n + idx(i2, j2)] =
              std::uint16_t(idx((i + i2 * vpow[std::size_t(j)]) % M, (j + j2) % B));
  std::vector<std::string> labels(n);
  for (long long j = 0; j < B; ++j)
    for (long long i = 0; i < M; ++i) labels[idx(i, j)] = pair_power_label("a", i, "b", j);
  std::map<std::string, Elem> gens{{"a", Elem(idx(1, 0))}, {"b", Elem(idx(0, 1))}};
  const std::string name = "SNNC(" + std::to_string(p) + "," + std::to_string(alpha) + "," +
                           std::to_string(beta) + ")";
  return CayleyGroup(name, int(n), std::move(table), std::move(labels), std::move(gens), opts);
}

// ---- spec grammar ----

std::string GroupSpec::text() const {
  switch (kind) {
    case Kind::Product:
      return "x(" + left->text() + "," + right->text() + ")";
    case Kind::File:
      return "file:" + path;
    case Kind::Family:
      break;
  }
  std::string s = family;
  if (family == "C" || family == "D" || family == "Q" || family == "S" || family == "A") {
    s += std::to_string(args[0]);
  } else {
    s += "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
    s += ")";
  }
  return s;
}

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;
  int depth = 0;  // product nesting; file paths stop at ',' or ')' when nested

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  long long parse_int() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }

  std::vector<long long> parse_args() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<long long> args;
    while (true) {
      args.push_back(parse_int());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        return args;
      }
      fail("expected ',' or ')'");
    }
  }

  GroupSpec parse_spec() {
    skip_ws();
    if (text.compare(pos, 5, "file:") == 0) {
      GroupSpec s;
      s.kind = GroupSpec::Kind::File;
      pos += 5;
      const std::size_t start = pos;
      while (pos < text.size() && (depth == 0 || (text[pos] != ',' && text[pos] != ')'))) ++pos;
      s.path = text.substr(start, pos - start);
      if (s.path.empty()) fail("empty file path");
      return s;
    }
    if (text.compare(pos, 2, "x(") == 0) {
      pos += 2;
      ++depth;
      GroupSpec s;
      s.kind = GroupSpec::Kind::Product;
      s.left = std::make_shared<GroupSpec>(parse_spec());
      skip_ws();
      if (pos >= text.size() || text[pos] != ',') fail("expected ',' in product");
      ++pos;
      s.right = std::make_shared<GroupSpec>(parse_spec());
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')' in product");
      ++pos;
      --depth;
      return s;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string name = text.substr(start, pos - start);
    if (name.empty()) fail("expected family name");

    static const std::vector<std::string> known = {"C", "D", "Q", "S", "A", "EA", "Heis", "SL", "SNNC"};
    if (std::find(known.begin(), known.end(), name) == known.end())
      fail("unknown family '" + name + "'");

    GroupSpec s;
    s.kind = GroupSpec::Kind::Family;
    s.family = name;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      s.args.push_back(parse_int());
    } else {
      s.args = parse_args();
    }
    return s;
  }
};

int checked_int(long long v, const std::string& what) {
  if (v < 0 || v > kMaxRepresentableOrder) throw BadParameter(what + " out of range");
  return int(v);
}

int log2_exact(long long v) {
  int m = 0;
  while (v > 1 && v % 2 == 0) {
    v /= 2;
    ++m;
  }
  return v == 1 ? m : -1;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  SpecParser parser{text};
  GroupSpec spec = parser.parse_spec();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing characters after spec");
  validate_args(spec);
  return spec;
}

void validate_args(const GroupSpec& spec) {
  if (spec.kind != GroupSpec::Kind::Family) {
    if (spec.kind == GroupSpec::Kind::Product) {
      validate_args(*spec.left);
      validate_args(*spec.right);
    }
    return;
  }
  const auto& a = spec.args;
  auto need = [&](bool cond, const std::string& msg) {
    if (!cond) throw BadParameter(spec.family + ": " + msg);
  };
  if (spec.family == "C") {
    need(a.size() == 1 && a[0] >= 1, "needs one argument n >= 1");
  } else if (spec.family == "D") {
    need(a.size() == 1 && a[0] >= 1, "needs one argument n >= 1 (order 2n)");
  } else if (spec.family == "Q") {
    need(a.size() == 1, "needs one argument (the order, a power of two >= 8)");
    need(a[0] >= 8 && log2_exact(a[0]) > 0, "order must be a power of two >= 8");
  } else if (spec.family == "S") {
    need(a.size() == 1 && a[0] >= 1 && a[0] <= 7, "needs one argument 1 <= n <= 7");
  } else if (spec.family == "A") {
    need(a.size() == 1 && a[0] >= 2 && a[0] <= 7, "needs one argument 2 <= n <= 7");
  } else if (spec.family == "EA") {
    need(a.size() == 2, "needs two arguments (p,k)");
    need(is_prime(a[0]), "p must be prime");
    need(a[1] >= 1, "k must be >= 1");
  } else if (spec.family == "Heis") {
    need(a.size() == 1, "needs one argument (an odd prime)");
    need(is_prime(a[0]) && a[0] != 2, "p must be an odd prime");
  } else if (spec.family == "SL") {
    need(a.size() == 2 && a[0] == 2, "needs arguments (2,p)");
    need(is_prime(a[1]) && a[1] <= 7, "p must be a prime <= 7");
  } else if (spec.family == "SNNC") {
    need(a.size() == 3, "needs three arguments (p,alpha,beta)");
    need(is_prime(a[0]), "p must be prime");
    need(a[1] >= a[2] && a[2] >= 1, "parameters must satisfy alpha >= beta >= 1");
    need(!(a[0] == 2 && a[1] == 1 && a[2] == 1), "(2,1,1) is excluded (it presents D4)");
  }
}

CayleyGroup make_family(const GroupSpec& spec, const ValidateOptions& opts) {
  switch (spec.kind) {
    case GroupSpec::Kind::File:
      return load_group_file(spec.path, opts);
    case GroupSpec::Kind::Product:
      return make_direct_product(make_family(*spec.left, opts), make_family(*spec.right, opts),
                                 opts);
    case GroupSpec::Kind::Family:
      break;
  }
  validate_args(spec);
  const auto& a = spec.args;
  if (spec.family == "C") return make_cyclic(checked_int(a[0], "n"), opts);
  if (spec.family == "D") return make_dihedral(checked_int(a[0], "n"), opts);
  if (spec.family == "Q") return make_generalized_quaternion(log2_exact(a[0]), opts);
  if (spec.family == "S") return make_symmetric(int(a[0]), opts);
  if (spec.family == "A") return make_alternating(int(a[0]), opts);
  if (spec.family == "EA")
    return make_elementary_abelian(checked_int(a[0], "p"), checked_int(a[1], "k"), opts);
  if (spec.family == "Heis") return make_heisenberg(int(a[0]), opts);
  if (spec.family == "SL") return make_special_linear2(int(a[1]), opts);
  if (spec.family == "SNNC")
    return make_snnc(SnncParams{int(a[0]), int(a[1]), int(a[2])}, opts);
  throw BadParameter("unknown family '" + spec.family + "'");
}

CayleyGroup make_family(const std::string& spec_text, const ValidateOptions& opts) {
  return make_family(parse_spec(spec_text), opts);
}

CayleyGroup load_group_file(const std::string& path, const ValidateOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BadShape("invalid JSON in " + path + ": " + e.what());
  }
  const std::string name = j.value("name", path);
  if (j.contains("table")) {
    if (!j.contains("order")) throw BadShape(path + ": missing \"order\"");
    const int order = j.at("order").get<int>();
    const auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return from_cayley_table(order, table, labels, name, opts);
  }
  if (j.contains("generators")) {
    if (!j.contains("degree")) throw BadShape(path + ": missing \"degree\"");
    const int degree = j.at("degree").get<int>();
    const auto gens = j.at("generators").get<std::vector<std::string>>();
    return from_permutations(degree, gens, name, opts);
  }
  throw BadShape(path + ": expected a \"table\" or \"generators\" key");
}

}  // namespace gg
