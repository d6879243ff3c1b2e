#include "hamrep/weight_module.hpp"

#include <sstream>
#include <stdexcept>

#include "hamrep/parallel.hpp"
#include "hamrep/rng.hpp"

namespace hamrep {

ModuleElement::ModuleElement(int n, int dim) : n_(n), dim_(dim) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("ModuleElement: length must be even and >= 2");
  if (dim < 1) throw std::invalid_argument("ModuleElement: dimension must be positive");
}

ModuleElement ModuleElement::term(int n, const MultiIndex& s, RatVec v) {
  ModuleElement x(n, static_cast<int>(v.size()));
  x.add_term(s, v);
  return x;
}

void ModuleElement::add_term(const MultiIndex& s, const RatVec& v) {
  if (s.size() != n_) throw std::invalid_argument("ModuleElement: key length mismatch");
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("ModuleElement: vector length mismatch");
  if (hamrep::is_zero(v)) return;
  auto [it, inserted] = terms_.try_emplace(s, v);
  if (!inserted) {
    it->second += v;
    if (hamrep::is_zero(it->second)) terms_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (n_ != o.n_ || dim_ != o.dim_)
    throw std::invalid_argument("ModuleElement: shape mismatch");
  for (const auto& [s, v] : o.terms_) add_term(s, v);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (n_ != o.n_ || dim_ != o.dim_)
    throw std::invalid_argument("ModuleElement: shape mismatch");
  for (const auto& [s, v] : o.terms_) add_term(s, Rational(-1) * v);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_)
    for (auto& x : v) x *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ModuleElement& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [s, v] : x.terms()) {
    os << (first ? "" : " + ") << "t^" << s << "(x)(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i];
    }
    os << ")";
    first = false;
  }
  return os;
}

ModuleElement act_d(const WeightModule& mod, int a, const ModuleElement& x) {
  if (a < 0 || a >= mod.n()) throw std::out_of_range("act_d: axis out of range");
  ModuleElement out(x.n(), x.dim());
  for (const auto& [s, v] : x.terms())
    out.add_term(s, (Rational(s[a]) + mod.lambda[a]) * v);
  return out;
}

ModuleElement act_laurent(const WeightModule& mod, const MultiIndex& r,
                          const ModuleElement& x) {
  if (r.size() != mod.n()) throw std::invalid_argument("act_laurent: length mismatch");
  ModuleElement out(x.n(), x.dim());
  for (const auto& [s, v] : x.terms()) out.add_term(s + r, v);
  return out;
}

ModuleElement act_h(const WeightModule& mod, const MultiIndex& r,
                    const ModuleElement& x) {
  if (r.size() != mod.n()) throw std::invalid_argument("act_h: length mismatch");
  ModuleElement out(x.n(), x.dim());
  if (r.is_zero()) return out;  // h(0) = 0
  const RatMatrix h = h_operator(mod.rep, r);
  for (const auto& [s, v] : x.terms()) {
    const Rational w(symplectic_pairing(r, s));
    if (!w.is_zero()) out.add_term(r + s, w * v);
    out.add_term(r + s, h * v);
  }
  return out;
}

namespace {

MultiIndex random_index(SplitRng& rng, int n, int extent, bool nonzero) {
  for (;;) {
    MultiIndex r = MultiIndex::zero(n);
    for (int i = 0; i < n; ++i) r[i] = rng.uniform_int(-extent, extent);
    if (!nonzero || !r.is_zero()) return r;
  }
}

RatVec random_vector(SplitRng& rng, int dim) {
  RatVec v(dim);
  for (auto& x : v)
    x = Rational(rng.uniform_int(-4, 4), rng.uniform_int(1, 3));
  return v;
}

ModuleElement random_element(SplitRng& rng, int n, int dim, int extent) {
  ModuleElement x(n, dim);
  const int terms = static_cast<int>(rng.uniform_int(1, 3));
  for (int t = 0; t < terms; ++t)
    x.add_term(random_index(rng, n, extent, false), random_vector(rng, dim));
  return x;
}

std::string describe(const char* what, const MultiIndex& r, const MultiIndex& s,
                     const ModuleElement& x) {
  std::ostringstream os;
  os << what << " r=" << r << ", s=" << s << ", x=" << x;
  return os.str();
}

}  // namespace

Report verify_module_axioms(const WeightModule& mod, int samples,
                            std::uint64_t seed, int extent) {
  if (extent < 1) throw std::invalid_argument("verify_module_axioms: extent >= 1");
  if (static_cast<int>(mod.lambda.size()) != mod.n())
    throw std::invalid_argument("verify_module_axioms: lambda length mismatch");
  Report report;
  report.command = "verify_module_axioms";
  report.seed = seed;

  const int n = mod.n();
  const int dim = mod.rep.dim;
  const SplitRng root(seed);

  struct SampleOutcome {
    std::string bracket, leibniz, matrix_identity, eigen;
  };
  const auto outcomes = parallel_map(static_cast<std::size_t>(samples), [&](std::size_t i) {
    SplitRng rng = root.split(i);
    SampleOutcome out;
    const MultiIndex r = random_index(rng, n, extent, false);
    const MultiIndex s = random_index(rng, n, extent, false);
    const MultiIndex u = random_index(rng, n, extent, false);
    const ModuleElement x = random_element(rng, n, dim, extent);

    // (i) Bracket compatibility: acting by the commutator equals the
    // structure-constant-weighted action of h(r+s).
    {
      const ModuleElement lhs =
          act_h(mod, r, act_h(mod, s, x)) - act_h(mod, s, act_h(mod, r, x));
      const ModuleElement rhs =
          Rational(symplectic_pairing(r, s)) * act_h(mod, r + s, x);
      if (!(lhs == rhs)) out.bracket = describe("bracket:", r, s, x);
    }
    // (ii) Leibniz rule against multiplication by t^u.
    {
      const ModuleElement lhs = act_h(mod, r, act_laurent(mod, u, x));
      const ModuleElement rhs =
          Rational(symplectic_pairing(r, u)) * act_laurent(mod, r + u, x) +
          act_laurent(mod, u, act_h(mod, r, x));
      if (!(lhs == rhs)) out.leibniz = describe("leibniz:", r, u, x);
    }
    // (iii) Matrix identity away from the origin.
    if (!r.is_zero() && !s.is_zero() && !(r + s).is_zero()) {
      const RatMatrix lhs = commutator(h_operator(mod.rep, r), h_operator(mod.rep, s));
      RatMatrix rhs = h_operator(mod.rep, r) + h_operator(mod.rep, s) -
                      h_operator(mod.rep, r + s);
      rhs *= Rational(-symplectic_pairing(r, s));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "matrix identity: r=" << r << ", s=" << s;
        out.matrix_identity = os.str();
      }
    }
    // (iv) Derivation eigenvalues track key arithmetic.
    {
      const MultiIndex t = random_index(rng, n, extent, false);
      const ModuleElement single = ModuleElement::term(n, t, random_vector(rng, dim));
      for (int a = 0; a < n && out.eigen.empty(); ++a) {
        const ModuleElement via_h = act_h(mod, r, single);
        const Rational ev_h = mod.lambda[a] + Rational(t[a]) + Rational(r[a]);
        if (!(act_d(mod, a, via_h) == ev_h * via_h))
          out.eigen = describe("eigenvalue under h:", r, t, single);
        const ModuleElement via_t = act_laurent(mod, u, single);
        const Rational ev_t = mod.lambda[a] + Rational(t[a]) + Rational(u[a]);
        if (!(act_d(mod, a, via_t) == ev_t * via_t))
          out.eigen = describe("eigenvalue under t:", u, t, single);
      }
    }
    return out;
  });

  const auto tally = [&](const char* name, auto member) {
    int failures = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const std::string& w = outcomes[i].*member;
      if (!w.empty()) {
        report.add_fail(std::string(name) + " sample " + std::to_string(i), w);
        ++failures;
      }
    }
    std::ostringstream os;
    os << samples << " samples, extent " << extent << ", " << failures << " failures";
    if (failures == 0)
      report.add_pass(name, os.str());
    else
      report.add_fail(name, os.str());
  };
  tally("bracket compatibility", &SampleOutcome::bracket);
  tally("leibniz rule", &SampleOutcome::leibniz);
  tally("H-matrix commutator identity", &SampleOutcome::matrix_identity);
  tally("derivation eigenvalue bookkeeping", &SampleOutcome::eigen);
  return report;
}

std::vector<RatVec> reachable_span(const WeightModule& mod, int window_radius,
                                   const RatVec& start, int depth) {
  if (window_radius < 1)
    throw std::invalid_argument("reachable_span: window radius must be >= 1");
  const int dim = mod.rep.dim;
  if (static_cast<int>(start.size()) != dim)
    throw std::invalid_argument("reachable_span: start vector length mismatch");

  // All H(r) with r in the signed box of max-norm <= R, r != 0; these are
  // the weight-preserving normalized actions available in the window.
  std::vector<RatMatrix> window;
  MultiIndex r = MultiIndex::zero(mod.n());
  for (int i = 0; i < mod.n(); ++i) r[i] = -window_radius;
  for (;;) {
    if (!r.is_zero()) window.push_back(h_operator(mod.rep, r));
    int axis = mod.n() - 1;
    while (axis >= 0 && r[axis] == window_radius) r[axis--] = -window_radius;
    if (axis < 0) break;
    r[axis] += 1;
  }

  SpanBuilder span(dim);
  span.add(start);
  std::vector<RatVec> frontier = {start};
  for (int level = 0; level < depth && !frontier.empty() && !span.is_full(); ++level) {
    std::vector<RatVec> next;
    for (const auto& v : frontier)
      for (const auto& h : window) {
        RatVec w = h * v;
        if (span.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return span.basis();
}

Report cyclicity_probe(const WeightModule& mod, int window_radius,
                       const RatVec& start, int depth) {
  Report report;
  report.command = "cyclicity_probe";
  const auto basis = reachable_span(mod, window_radius, start, depth);
  std::ostringstream os;
  os << "HEURISTIC (finite window, word length <= " << depth
     << "): span dimension " << basis.size() << " of dim V = " << mod.rep.dim
     << ", window radius " << window_radius;
  if (static_cast<int>(basis.size()) == mod.rep.dim)
    report.add_pass("cyclicity probe", os.str());
  else
    report.add_fail("cyclicity probe", os.str());
  return report;
}

}  // namespace hamrep
