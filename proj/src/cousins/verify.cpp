#include <sstream>

#include "bwc/cousins/cousins.hpp"
#include "bwc/error.hpp"

namespace bwc::cousins {

using lat::Int;

namespace {

std::string str(std::size_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string disc_str(const std::vector<Int>& f) {
  if (f.empty()) return "trivial";
  std::map<std::string, std::size_t> by;
  for (const auto& x : f) ++by[x.get_str()];
  std::string s;
  for (const auto& [p, n] : by) s += (s.empty() ? "" : " x ") + std::string("(Z/") + p + ")^" + std::to_string(n);
  return s;
}

bool elementary_2(const std::vector<Int>& f, std::size_t rank) {
  if (f.size() != rank) return false;
  for (const auto& x : f)
    if (x != 2) return false;
  return true;
}

// kissing numbers of BW_1..BW_4
std::optional<std::uint64_t> bw_kissing(int d) {
  static const std::uint64_t k[] = {0, 4, 24, 240, 4320};
  if (d >= 1 && d <= 4) return k[d];
  return std::nullopt;
}

// 2^{-m} v_A eps_S with A an affine (2m-1)-space inside `region`, S in RM(2,d)
bool has_min_form(const DyadicVector& x, const gf2::BitWord& region) {
  const int d = x.d();
  const auto lt = lat::level_and_top(x);
  const int m = lt.level;
  if (m < 1) return false;
  gf2::BitWord supp(d), neg(d);
  std::vector<gf2::Point> pts;
  for (gf2::Point i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (x[i] != Dyadic::pow2(-m) && x[i] != -Dyadic::pow2(-m)) return false;
    supp.set(i);
    pts.push_back(i);
    if (x[i].sign() < 0) neg.set(i);
  }
  if (!(supp & region.complement()).empty()) return false;
  if (pts.size() != (std::size_t{1} << (2 * m - 1))) return false;
  std::vector<gf2::Point> dirs;
  for (auto p : pts) dirs.push_back(p ^ pts[0]);
  gf2::LinearSpan span(d, {});
  for (auto p : dirs)
    if (p) span.insert(p);
  if (span.dimension() != 2 * m - 1) return false;
  std::vector<gf2::BitWord> gens;
  for (const auto& s : gf2::build_rm(2, d).basis()) gens.push_back(s & supp);
  return gf2::Code::span(d, gens).contains(neg);
}

// (v_b + v_{b + e_{d-1}})/2 with b in the region and b_d = 0; a point pair in
// A cap H for the 2-space A = b + <e_{d-1}, e_d> and H = {x_d = 0}.
std::optional<DyadicVector> min_witness(const CousinSpec& c) {
  const int d = c.d;
  const gf2::Point e1 = gf2::Point{1} << (d - 2);
  for (gf2::Point b = 0; b < (gf2::Point{1} << (d - 1)); ++b) {
    if (!c.region.test(b) || !c.region.test(b ^ e1)) continue;
    const auto x = DyadicVector::from_word(gf2::BitWord::from_points(d, {b, b ^ e1}), 1);
    if (c.lattice.contains(x)) return x;
  }
  return std::nullopt;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(VerificationReport& r) : r_(r) {}
  void add(std::string name, std::string source, std::string expected, std::string computed, Status st) {
    r_.claims.push_back({std::move(name), std::move(source), std::move(expected), std::move(computed), st});
  }
  void check(std::string name, std::string source, const std::string& expected, const std::string& computed) {
    add(std::move(name), std::move(source), expected, computed, expected == computed ? Status::pass : Status::fail);
  }

 private:
  VerificationReport& r_;
};

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::bounded: return "bounded";
    case Status::skipped_budget: return "skipped-budget";
  }
  return "?";
}

bool VerificationReport::ok() const {
  for (const auto& c : claims)
    if (c.status == Status::fail) return false;
  return true;
}

bool VerificationReport::complete() const {
  for (const auto& c : claims)
    if (c.status != Status::pass) return false;
  return true;
}

VerificationReport verify_cousin(int d, int k, int eps, std::uint64_t budget) {
  const CousinSpec c = mc1(d, k, eps);
  const Lattice& l = c.lattice;
  const Lattice& bw = bw::build_bw(d);
  const auto& t = c.t.t;

  VerificationReport r;
  r.d = d;
  r.k = k;
  r.eps = eps;
  r.rank = l.rank();
  const Dyadic det = lat::det(l);
  r.det = det.str();
  r.even = lat::is_even(l);
  ReportBuilder rb(r);

  rb.check("rank", "rank formula 2^{d-1} + eps 2^{d-k-1}", str(cousin_rank(d, k, eps)), str(r.rank));
  rb.check("integral", "integrality of first cousins", "true", str(lat::is_integral(l)));
  if (d % 2) rb.check("unimodular", "first cousins are unimodular for odd d", "1", r.det);
  if (2 * k <= d - 2) rb.check("even", "even when k <= d/2 - 1", "true", str(r.even));
  if (d == 2 * k + 1 || d == 2 * k) {
    // integral, so odd iff some basis vector has odd norm
    std::string computed = "no odd basis vector";
    bool odd = false;
    for (const auto& v : l.basis()) {
      const Dyadic n = v.norm();
      if (n.is_integer() && n.mantissa() % 2 != 0) {
        odd = true;
        computed = "basis vector of norm " + n.str();
        break;
      }
    }
    rb.add("odd", "odd when d = 2k or 2k + 1", "vector of odd norm", computed, odd ? Status::pass : Status::fail);
  }

  // minimum norm
  const Dyadic mu_bw = Dyadic::pow2(d / 2);
  const bool thm_range = d % 2 == 1 && d - 2 * k >= 3;
  const Dyadic mu_thm = Dyadic::pow2((d - 1) / 2 - 1);
  std::optional<lat::MinNorm> mn;
  try {
    mn = lat::min_norm(l, budget);
  } catch (const Error& e) {
    if (e.code() != Errc::budget) throw;
  }
  const auto witness = thm_range ? min_witness(c) : std::nullopt;
  if (mn) {
    r.min_norm = mn->norm.str();
  } else if (witness) {
    r.min_norm = "<= " + witness->norm().str() + " (enumeration over budget)";
  } else {
    r.min_norm = "unknown (enumeration over budget)";
  }
  if (eps < 0) {
    const Dyadic want = mu_bw * Dyadic::pow2(-1);
    if (mn) {
      rb.check("min_norm", "mu(MC_1(d,k,-)) = mu(BW_d)/2", want.str(), mn->norm.str());
    } else {
      rb.add("min_norm", "mu(MC_1(d,k,-)) = mu(BW_d)/2", want.str(), r.min_norm, Status::skipped_budget);
    }
  } else {
    const std::string want = "<= " + mu_bw.str();
    if (mn) {
      rb.add("min_norm_upper", "mu(MC_1(d,k,+)) <= 2^{floor(d/2)}", want, mn->norm.str(),
             mn->norm <= mu_bw ? Status::pass : Status::fail);
    } else {
      rb.add("min_norm_upper", "mu(MC_1(d,k,+)) <= 2^{floor(d/2)}", want, r.min_norm, Status::skipped_budget);
    }
  }
  if (thm_range) {
    rb.add("min_witness", "explicit vector 2^{-p} v_{A cap H}", "lattice vector of norm " + mu_thm.str(),
           witness ? "norm " + witness->norm().str() : "none found",
           witness && witness->norm() == mu_thm ? Status::pass : Status::fail);
    if (mn) {
      rb.check("min_norm_exact", "mu = 2^{delta-1} for odd d, d - 2k >= 3", mu_thm.str(), mn->norm.str());
    } else {
      rb.add("min_norm_exact", "mu = 2^{delta-1} for odd d, d - 2k >= 3", mu_thm.str(), r.min_norm,
             witness ? Status::bounded : Status::skipped_budget);
    }
    // minimal vectors: outside L^eps(t) and of the stated form
    const std::string form_src = "minimal vectors are 2^{-m} v_A eps_S, A an affine (2m-1)-space in the region";
    const std::string out_src = "minimal vectors lie outside L^eps(t)";
    try {
      if (!mn) fail(Errc::budget, "minimum not certified");
      const auto sv = lat::enumerate_short(l, mu_thm, budget);
      const Lattice le = bw::eigenlattice(bw, t, eps);
      std::size_t inside = 0, bad = 0;
      for (const auto& p : sv.pairs) {
        if (le.contains(p.v)) ++inside;
        if (!has_min_form(p.v, c.region)) ++bad;
      }
      rb.check("min_vectors_outside_eigenlattice", out_src, "0 of " + str(sv.total),
               str(2 * inside) + " of " + str(sv.total));
      rb.check("min_vector_form", form_src, "0 exceptions", str(2 * bad) + " exceptions");
    } catch (const Error& e) {
      if (e.code() != Errc::budget) throw;
      rb.add("min_vectors_outside_eigenlattice", out_src, "all", "enumeration over budget", Status::skipped_budget);
      rb.add("min_vector_form", form_src, "all", "enumeration over budget", Status::skipped_budget);
    }
  }
  if (mn && d == 5 && k == 1) {
    const std::uint64_t want = (eps < 0 ? 1 : 3) * *bw_kissing(3);
    try {
      rb.check("kissing", "minimal vectors of BW_3 (x3 for eps = +)", std::to_string(want),
               std::to_string(lat::enumerate_short(l, mn->norm, budget).total));
    } catch (const Error& e) {
      if (e.code() != Errc::budget) throw;
      rb.add("kissing", "minimal vectors of BW_3", std::to_string(want), "over budget", Status::skipped_budget);
    }
  }

  // eigenlattices of t on BW_d
  r.jno = brw::jordan_number(bw, t);
  const std::size_t elm = (std::size_t{1} << (d - 1)) - (std::size_t{1} << (d - k - 1));
  rb.check("jordan_number", "JNo of a split defect-k involution", str(elm), str(static_cast<std::size_t>(r.jno)));
  const auto e = bw::eigen_data(bw, t);
  if (d % 2) {
    r.disc_plus = lat::discriminant_group(e.plus);
    r.disc_minus = lat::discriminant_group(e.minus);
    const std::string want = "(Z/2)^" + str(elm);
    rb.add("disc_plus", "D(L^+(t)) elementary abelian of rank JNo", want, disc_str(r.disc_plus),
           elementary_2(r.disc_plus, elm) ? Status::pass : Status::fail);
    rb.add("disc_minus", "D(L^-(t)) elementary abelian of rank JNo", want, disc_str(r.disc_minus),
           elementary_2(r.disc_minus, elm) ? Status::pass : Status::fail);
  }
  rb.check("minus_is_commutator", "L^-(t) = [L,t]", "true", str(e.minus == bw::commutator_sublattice(bw, t)));
  rb.check("minus_in_2p_minus", "L^-(t) <= 2P^-(L)", "true",
           str(bw::projected_lattice(bw, t, -1).scaled_pow2(1).contains_lattice(e.minus)));

  // xi = f - 1 takes the cousin into L^eps(t) and doubles norms
  {
    const Lattice le = eps > 0 ? e.plus : e.minus;
    bool into = true, doubles = true;
    for (const auto& x : l.basis()) {
      const auto y = c.f.f.apply(x) - x;
      into = into && le.contains(y);
      doubles = doubles && y.norm() == x.norm() * Dyadic(2);
    }
    rb.check("xi_into_eigenlattice", "x(f - 1) lies in L^eps(t)", "true", str(into));
    rb.check("xi_doubles_norms", "(x(f-1), x(f-1)) = 2(x,x)", "true", str(doubles));
  }
  rb.check("f_independence", "cousin does not depend on the lower fourvolution", "true",
           str(mc1_with(d, k, eps, brw::alternate_fourvolution(c.t)).lattice == l));

  // orthogonal decomposition
  const std::string dsrc = k == 1 ? (eps < 0 ? "MC_1(d,1,-) = BW_{d-2}" : "MC_1(d,1,+) = BW_{d-2}^3") : "";
  if (l.rank() <= 24) {
    try {
      const auto dec = lat::decompose(l, budget);
      std::ostringstream os;
      os << dec.components.size() << " component(s) of rank";
      for (const auto& comp : dec.components) os << ' ' << comp.rank();
      r.decomposition = os.str();
      if (k == 1) {
        const std::size_t want = eps < 0 ? 1 : 3;
        bool iso = dec.components.size() == want;
        for (const auto& comp : dec.components)
          iso = iso && lat::gram_isometric(comp, bw::build_bw(d - 2), budget).status == lat::IsoStatus::isometric;
        rb.add("decomposition", dsrc, str(want) + " component(s), each isometric to BW_" + std::to_string(d - 2),
               r.decomposition + (iso ? ", isometric" : ""), iso ? Status::pass : Status::fail);
      } else {
        rb.add("decomposition", "computed", "reported", r.decomposition, Status::pass);
      }
    } catch (const Error& ex) {
      if (ex.code() != Errc::budget) throw;
      r.decomposition = "over budget";
      rb.add("decomposition", k == 1 ? dsrc : "computed", "reported", r.decomposition, Status::skipped_budget);
    }
  } else {
    r.decomposition = "not attempted above rank 24";
    if (k == 1) rb.add("decomposition", dsrc, "components isometric to BW_" + std::to_string(d - 2), r.decomposition,
                       Status::skipped_budget);
  }
  return r;
}

}  // namespace bwc::cousins
