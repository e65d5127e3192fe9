#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bwc/cousins/cousins.hpp"
#include "bwc/error.hpp"
#include "bwc/io/io.hpp"

using namespace bwc;
using lat::Dyadic;
using lat::Lattice;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, budget = 3 };

struct Opts {
  std::string target = "bw";
  int d = 3, k = 1;
  std::string eps = "+";
  std::string bound;
  std::string budget = "1e9";
  std::string out, in, format = "json";
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_eps(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Usage("--eps must be + or -");
}

std::uint64_t parse_budget(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() || v < 1 || v > 1e19) throw Usage("bad --budget " + s);
    return static_cast<std::uint64_t>(v);
  } catch (const std::logic_error&) {
    throw Usage("bad --budget " + s);
  }
}

Dyadic parse_bound(const Opts& o, const Lattice& l) {
  if (o.bound.empty()) {
    const auto m = lat::min_norm(l, parse_budget(o.budget));
    return m.norm;
  }
  try {
    return Dyadic::parse(o.bound);
  } catch (const Error&) {
    throw Usage("bad --bound " + o.bound);
  }
}

std::optional<cousins::CousinSpec> cousin;

Lattice load(const Opts& o) {
  if (!o.in.empty()) {
    std::ifstream f(o.in);
    if (!f) throw Usage("cannot read " + o.in);
    io::Json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::parse, e.what());
    }
    return io::lattice_from_json(j);
  }
  if (o.target == "bw") return bw::build_bw(o.d);
  if (o.target == "mc1") {
    cousin = cousins::mc1(o.d, o.k, parse_eps(o.eps));
    return cousin->lattice;
  }
  if (o.target == "lplus" || o.target == "lminus") {
    const auto t = brw::make_involution(gf2::cubi_codeword(o.d, o.k));
    return bw::eigenlattice(bw::build_bw(o.d), t.t, o.target == "lplus" ? 1 : -1);
  }
  throw Usage("unknown target " + o.target + " (bw, mc1, lplus, lminus)");
}

std::string parity(const Lattice& l) {
  if (!lat::is_integral(l)) return "not integral";
  return lat::is_even(l) ? "even" : "odd";
}

void emit(const Opts& o, const io::Json& j) {
  if (!o.out.empty()) io::write_file(o.out, j);
}

void summary(const Lattice& l) {
  std::cout << "rank " << l.rank() << "\ndet " << lat::det(l).str() << "\nparity " << parity(l) << "\n";
}

int cmd_build(const Opts& o) {
  const Lattice l = load(o);
  summary(l);
  emit(o, io::to_json(l));
  return ok;
}

int cmd_verify(const Opts& o) {
  if (o.target != "mc1") throw Usage("verify supports mc1 only");
  const auto r = cousins::verify_cousin(o.d, o.k, parse_eps(o.eps), parse_budget(o.budget));
  std::cout << "MC_1(" << o.d << "," << o.k << "," << (r.eps > 0 ? "+" : "-") << "): rank " << r.rank << ", det " << r.det
            << ", " << (r.even ? "even" : "odd") << ", min norm " << r.min_norm << "\n";
  bool any_fail = false, any_budget = false;
  for (const auto& c : r.claims) {
    std::cout << "  " << cousins::to_string(c.status) << "  " << c.name << ": " << c.computed;
    if (c.status != cousins::Status::pass) std::cout << " (expected " << c.expected << ")";
    std::cout << "\n";
    any_fail |= c.status == cousins::Status::fail;
    any_budget |= c.status == cousins::Status::skipped_budget;
  }
  emit(o, io::to_json(r));
  return any_fail ? failed : any_budget ? budget : ok;
}

int cmd_enumerate(const Opts& o) {
  const Lattice l = load(o);
  const Dyadic b = parse_bound(o, l);
  const auto sv = lat::enumerate_short(l, b, parse_budget(o.budget));
  std::map<Dyadic, std::uint64_t> by;
  io::Json vs = io::Json::array();
  for (const auto& p : sv.pairs) {
    by[p.norm] += 2;
    io::Json row = io::Json::array();
    for (std::size_t i = 0; i < p.v.size(); ++i) row.push_back(p.v[i].str());
    vs.push_back({{"norm", p.norm.str()}, {"vector", std::move(row)}});
  }
  std::cout << "vectors of norm <= " << b.str() << ": " << sv.total << "\n";
  for (const auto& [n, c] : by) std::cout << "  " << n.str() << ": " << c << "\n";
  emit(o, {{"bound", b.str()}, {"total", sv.total}, {"pairs", std::move(vs)}});
  return ok;
}

int cmd_theta(const Opts& o) {
  const Lattice l = load(o);
  const Dyadic b = parse_bound(o, l);
  const auto th = lat::theta(l, b, parse_budget(o.budget));
  io::Json j = io::Json::object();
  for (const auto& [n, c] : th.counts) {
    std::cout << n.str() << " " << c << "\n";
    j[n.str()] = c;
  }
  emit(o, {{"bound", b.str()}, {"counts", std::move(j)}});
  return ok;
}

int cmd_decompose(const Opts& o) {
  const Lattice l = load(o);
  const auto dec = lat::decompose(l, parse_budget(o.budget));
  std::cout << dec.components.size() << " components, index " << dec.index.get_str() << "\n";
  io::Json cs = io::Json::array();
  for (const auto& c : dec.components) {
    std::cout << "  rank " << c.rank() << ", det " << lat::det(c).str() << ", " << parity(c) << "\n";
    cs.push_back(io::to_json(c));
  }
  emit(o, {{"index", dec.index.get_str()}, {"components", std::move(cs)}});
  return ok;
}

int cmd_jno(const Opts& o) {
  const auto t = brw::make_involution(gf2::cubi_codeword(o.d, o.k));
  const int j = brw::jordan_number(bw::build_bw(o.d), t.t);
  std::cout << j << "\n";
  emit(o, {{"d", o.d}, {"k", o.k}, {"jordan_number", j}});
  return ok;
}

int cmd_export(const Opts& o) {
  const Lattice l = load(o);
  io::Json j;
  j["lattice"] = io::to_json(l);
  j["gram"] = io::gram_to_json(l);
  if (cousin) {
    j["t"] = io::to_json(cousin->t.t);
    j["f"] = io::to_json(cousin->f.f);
  }
  if (o.out.empty()) {
    std::cout << io::dump(j);
  } else {
    emit(o, j);
    summary(l);
  }
  return ok;
}

int cmd_leech(const Opts& o) {
#ifdef BWC_ENABLE_LEECH
  const auto r = cousins::leech_cousin();
  std::cout << r.diagnostics;
  if (!r.found) {
    std::cout << "no Leech cousin found\n";
    return failed;
  }
  std::cout << "method: " << r.method << "\nrank " << r.lattice.rank() << ", " << (r.even ? "even" : "odd")
            << (r.unimodular ? ", unimodular" : "") << ", min norm " << r.min_norm->str();
  if (r.kissing) std::cout << ", kissing " << *r.kissing;
  std::cout << "\n";
  emit(o, io::to_json(r.lattice));
  return r.even && r.unimodular && *r.min_norm == Dyadic(4) ? ok : failed;
#else
  (void)o;
  std::cerr << "built without BWC_ENABLE_LEECH\n";
  return usage;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("BWC_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(t, &end, 10);
    if (*t == '\0' || *end != '\0' || n < 1) {
      std::cerr << "BWC_THREADS must be a positive integer\n";
      return usage;
    }
  }
  CLI::App app{"Barnes-Wall lattices and their midwest cousins"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* s, bool target) {
    if (target) s->add_option("target", o.target, "bw, mc1, lplus or lminus");
    s->add_option("--d", o.d, "dimension exponent")->check(CLI::Range(1, 12));
    s->add_option("--k", o.k, "defect of t")->check(CLI::Range(0, 6));
    s->add_option("--eps", o.eps, "eigenspace sign, + or -");
    s->add_option("--budget", o.budget, "enumeration node cap");
    s->add_option("--out", o.out, "write JSON here");
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));
  };
  std::map<std::string, std::function<int(const Opts&)>> verbs{
      {"build", cmd_build},         {"verify", cmd_verify}, {"enumerate", cmd_enumerate}, {"theta", cmd_theta},
      {"decompose", cmd_decompose}, {"jno", cmd_jno},       {"export", cmd_export},       {"leech", cmd_leech}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : verbs) {
    auto* s = app.add_subcommand(name);
    common(s, name != "jno" && name != "leech");
    if (name == "enumerate" || name == "theta") s->add_option("--bound", o.bound, "norm bound (default: minimum)");
    if (name != "jno" && name != "leech" && name != "verify") s->add_option("--in", o.in, "read a lattice JSON");
    subs[name] = s;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }
  try {
    for (const auto& [name, s] : subs)
      if (s->parsed()) return verbs[name](o);
  } catch (const Usage& e) {
    std::cerr << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == Errc::budget) return budget;
    if (e.code() == Errc::size || e.code() == Errc::precondition || e.code() == Errc::parse) return usage;
    return failed;
  }
  return usage;
}
