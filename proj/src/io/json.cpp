#include "bwc/io/io.hpp"

#include <fstream>

#include "bwc/error.hpp"

namespace bwc::io {

Json to_json(const lat::Lattice& l) {
  Json j;
  j["d"] = l.d();
  j["scale_log2"] = l.scale();
  Json rows = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const auto v = l.basis_vector(i);
    Json row = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k) row.push_back(v[k].str());
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  return j;
}

lat::Lattice lattice_from_json(const Json& j) {
  try {
    const int d = j.at("d").get<int>();
    require(d >= 0 && d <= 12, Errc::parse, "lattice d out of range");
    std::vector<lat::DyadicVector> gens;
    for (const auto& row : j.at("basis")) {
      require(row.size() == std::size_t{1} << d, Errc::parse, "basis row has the wrong length");
      lat::DyadicVector v(d);
      for (std::size_t k = 0; k < row.size(); ++k) v[k] = lat::Dyadic::parse(row[k].get<std::string>());
      gens.push_back(std::move(v));
    }
    return lat::make_lattice(d, gens);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, e.what());
  }
}

Json gram_to_json(const lat::Lattice& l) {
  const auto g = lat::gram(l);
  Json j;
  j["scale_log2"] = -g.exp;  // gram = entries / 2^scale_log2
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.size(); ++k) row.push_back(g.m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  return j;
}

Json to_json(const brw::MonomialIsometry& g) {
  Json j;
  j["sign"] = g.sign().hex();
  j["linear"] = g.linear();
  j["translate"] = g.translate();
  return j;
}

brw::MonomialIsometry isometry_from_json(int d, const Json& j) {
  try {
    return brw::MonomialIsometry(gf2::BitWord::from_hex(d, j.at("sign").get<std::string>()),
                                 j.at("linear").get<std::vector<gf2::Point>>(), j.at("translate").get<gf2::Point>());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, e.what());
  }
}

Json to_json(const cousins::VerificationReport& r) {
  Json j;
  j["params"] = {{"d", r.d}, {"k", r.k}, {"eps", r.eps > 0 ? "+" : "-"}};
  j["rank"] = r.rank;
  j["det"] = r.det;
  j["even"] = r.even;
  j["min_norm"] = r.min_norm;
  j["jordan_number"] = r.jno;
  auto inv = [](const std::vector<lat::Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  j["disc_plus"] = inv(r.disc_plus);
  j["disc_minus"] = inv(r.disc_minus);
  j["decomposition"] = r.decomposition;
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"name", c.name},
                      {"source", c.source},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"status", cousins::to_string(c.status)}});
  j["claims"] = std::move(claims);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::parse, "cannot open " + path);
  out << dump(j);
}

}  // namespace bwc::io
