#include "arr/arrangement.hpp"

#include <algorithm>
#include <map>

#include "arr/error.hpp"

namespace arr {

namespace {

// Scales (normal, offset) so the first nonzero normal entry is 1.
std::vector<Rational> projective_key(const Hyperplane& h) {
  std::vector<Rational> key(h.normal);
  key.push_back(h.offset);
  auto pivot = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c != 0; });
  Rational inv = 1 / *pivot;
  for (auto& c : key) c *= inv;
  return key;
}

bool vector_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::braid: return "braid";
    case Family::linial: return "linial";
    case Family::shi: return "shi";
    case Family::ext_shi: return "ext_shi";
    case Family::catalan: return "catalan";
    case Family::catalan0: return "catalan0";
    case Family::trunc_affine: return "trunc_affine";
    case Family::semigeneric: return "semigeneric";
    case Family::generic: return "generic";
    case Family::rootsystem: return "rootsystem";
    case Family::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(RootSystem r) {
  switch (r) {
    case RootSystem::A: return "A";
    case RootSystem::B: return "B";
    case RootSystem::C: return "C";
    case RootSystem::D: return "D";
    case RootSystem::BC: return "BC";
  }
  return "A";
}

Family parse_family(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Family f : {Family::braid, Family::linial, Family::shi, Family::ext_shi, Family::catalan, Family::catalan0,
                   Family::trunc_affine, Family::semigeneric, Family::generic, Family::rootsystem, Family::custom})
    if (key == to_string(f)) return f;
  throw PreconditionError("unknown arrangement family '" + std::string(name) + "'");
}

RootSystem parse_root_system(std::string_view name) {
  for (RootSystem r : {RootSystem::A, RootSystem::B, RootSystem::C, RootSystem::D, RootSystem::BC})
    if (name == to_string(r)) return r;
  throw PreconditionError("unknown root system '" + std::string(name) + "'");
}

std::string FamilyTag::to_string() const {
  std::string base(arr::to_string(family));
  switch (family) {
    case Family::ext_shi: return base + "(" + std::to_string(params.a) + ")";
    case Family::trunc_affine: return base + "(" + std::to_string(params.a) + "," + std::to_string(params.b) + ")";
    case Family::generic: return base + "(" + std::to_string(params.m) + ")";
    case Family::rootsystem:
      return base + "(" + std::string(arr::to_string(params.root_system)) + "," + std::to_string(params.a) + "," +
             std::to_string(params.b) + ")";
    default: return base;
  }
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, FamilyTag label)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), label_(std::move(label)) {
  std::vector<std::vector<Rational>> keys;
  keys.reserve(hyperplanes_.size());
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    auto& h = hyperplanes_[i];
    if (h.normal.size() != dim_)
      throw PreconditionError("hyperplane " + std::to_string(i) + " has normal of length " +
                              std::to_string(h.normal.size()) + ", expected " + std::to_string(dim_));
    for (auto& c : h.normal) c.canonicalize();
    h.offset.canonicalize();
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; }))
      throw PreconditionError("hyperplane " + std::to_string(i) + " has a zero normal");
    keys.push_back(projective_key(h));
  }
  std::sort(keys.begin(), keys.end(), vector_less);
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw PreconditionError("arrangement contains a repeated hyperplane");
}

bool Arrangement::is_graphic() const {
  for (const auto& h : hyperplanes_) {
    int nonzero = 0;
    Rational sum = 0;
    for (const auto& c : h.normal)
      if (c != 0) {
        ++nonzero;
        sum += c;
      }
    if (nonzero != 2 || sum != 0) return false;
  }
  return true;
}

bool Arrangement::has_integer_data() const {
  for (const auto& h : hyperplanes_) {
    if (h.offset.get_den() != 1) return false;
    for (const auto& c : h.normal)
      if (c.get_den() != 1) return false;
  }
  return true;
}

QPolynomial poincare_from_chi(const QPolynomial& chi, std::size_t dim) {
  if (chi.degree() > static_cast<int>(dim)) throw PreconditionError("chi has degree above the dimension");
  std::vector<Rational> p(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) {
    std::size_t power = dim - k;
    if (static_cast<int>(power) > chi.degree()) continue;
    p[k] = (k % 2 == 0) ? chi.coeff(power) : Rational(-chi.coeff(power));
  }
  return QPolynomial(std::move(p));
}

QPolynomial chi_from_poincare(const QPolynomial& poin, std::size_t dim) {
  if (poin.degree() > static_cast<int>(dim)) throw PreconditionError("Poincare polynomial has degree above the dimension");
  std::vector<Rational> c(dim + 1);
  for (int k = 0; k <= poin.degree(); ++k)
    c[dim - static_cast<std::size_t>(k)] = (k % 2 == 0) ? poin.coeff(static_cast<std::size_t>(k))
                                                          : Rational(-poin.coeff(static_cast<std::size_t>(k)));
  return QPolynomial(std::move(c));
}

QPolynomial reduce_diagonal(const QPolynomial& chi_full) {
  if (chi_full.is_zero()) return chi_full;
  if (chi_full.coeff(0) != 0) throw PreconditionError("chi is not divisible by q: " + chi_full.to_string());
  auto c = chi_full.coefficients();
  return QPolynomial(std::vector<Rational>(c.begin() + 1, c.end()));
}

Integer region_count(const QPolynomial& poin) { return to_integer(poin(Rational(1))); }

Integer bounded_region_count(const QPolynomial& poin) {
  Integer v = to_integer(poin(Rational(-1)));
  return (poin.degree() % 2 == 0) ? v : Integer(-v);
}

void central_subsets(const Arrangement& a, const std::function<void(const CentralSubsetReport&)>& visit,
                     const EngineConfig& config) {
  if (a.size() > config.central_subsets_cap)
    throw CapExceeded("central_subsets_cap", static_cast<long long>(config.central_subsets_cap),
                      static_cast<long long>(a.size()), "use the nbc engine for larger arrangements");
  const std::size_t d = a.dim();
  RowEchelon normals(d);
  RowEchelon augmented(d + 1);
  std::vector<std::vector<Rational>> aug_rows;
  for (const auto& h : a.hyperplanes()) {
    auto row = h.normal;
    row.push_back(h.offset);
    aug_rows.push_back(std::move(row));
  }
  CentralSubsetReport report;
  // Pushes are undone in reverse, so each level remembers what it inserted.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    report.rank = normals.rank();
    report.central = normals.rank() == augmented.rank();
    visit(report);
    for (std::size_t j = start; j < a.size(); ++j) {
      bool n_in = normals.insert(a[j].normal);
      bool a_in = augmented.insert(aug_rows[j]);
      report.subset.push_back(j);
      self(self, j + 1);
      report.subset.pop_back();
      if (a_in) augmented.pop();
      if (n_in) normals.pop();
    }
  };
  recurse(recurse, 0);
}

}  // namespace arr
