// Command-line front end: toric ideals, GKZ analysis, multidegrees of
// bifiltered presentations, slope scans. Reports are canonical: fixed term
// order, fixed key order, all randomness derived from one --seed.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "multideg/hypergeom.hpp"
#include "multideg/io.hpp"

using json = nlohmann::ordered_json;
using namespace multideg;

namespace {

// stage-specific seed derived from the CLI seed by FNV-1a on the stage name
unsigned long long stage_seed(unsigned long long seed, const std::string& name) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.contains("A")) throw std::runtime_error("input is missing \"A\"");
  IntMatrix A;
  for (const auto& row : j.at("A")) {
    std::vector<BigInt> r;
    for (const auto& v : row) {
      if (v.is_number_integer())
        r.push_back(BigInt(static_cast<long>(v.get<long long>())));
      else
        r.push_back(BigInt(v.get<std::string>()));
    }
    A.push_back(std::move(r));
  }
  return A;
}

// beta: --beta overrides the file; "generic" means a seeded random draw
std::optional<std::vector<Rational>> beta_from(const json& j,
                                               const std::string& flag,
                                               int d) {
  std::string spec;
  if (!flag.empty()) {
    spec = flag;
  } else if (j.contains("beta")) {
    if (j.at("beta").is_string()) {
      spec = j.at("beta").get<std::string>();
    } else {
      std::vector<Rational> b;
      for (const auto& v : j.at("beta"))
        b.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                  : Rational(static_cast<long>(
                                        v.get<long long>())));
      if (static_cast<int>(b.size()) != d)
        throw std::runtime_error("beta has wrong length");
      return b;
    }
  } else {
    return std::nullopt;  // default: generic
  }
  if (spec == "generic") return std::nullopt;
  std::vector<Rational> b;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) b.push_back(Rational::parse(item));
  if (static_cast<int>(b.size()) != d)
    throw std::runtime_error("beta has wrong length");
  return b;
}

std::vector<std::pair<long, long>> parse_slopes(const std::string& s) {
  std::vector<std::pair<long, long>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto slash = item.find('/');
    if (slash == std::string::npos)
      throw std::runtime_error("slope must be written p/q: " + item);
    out.push_back({std::stol(item.substr(0, slash)),
                   std::stol(item.substr(slash + 1))});
  }
  if (out.empty()) throw std::runtime_error("empty slope list");
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

json stats_to_json(const std::map<std::string, GroebnerStats>& stats) {
  json s = json::object();
  for (const auto& [name, st] : stats)
    s[name] = {{"pairs_considered", st.pairs_considered},
               {"pairs_skipped", st.pairs_skipped},
               {"reductions_to_zero", st.reductions_to_zero},
               {"basis_size", st.basis_size}};
  return s;
}

json report_to_json(const MultidegreeReport& rep) {
  json r;
  r["k"] = kpoly_to_string(rep.k);
  r["codim"] = rep.codim;
  if (rep.codim_bigr) r["codim_bigr"] = *rep.codim_bigr;
  r["multidegree"] = kpoly_to_string(rep.multidegree.form);
  r["multidegree_degree"] = rep.multidegree.degree;
  r["nice"] = rep.nice;
  r["zero_multidegree"] = rep.zero_multidegree;
  r["specialized"] = rep.specialized;
  if (rep.specialized) r["x_values"] = rationals_to_json(rep.x_values);
  r["seed"] = rep.seed;
  r["groebner_stats"] = stats_to_json(rep.stats);
  return r;
}

json analysis_to_json(const GKZAnalysis& a) {
  json r;
  r["d"] = a.d;
  r["n"] = a.n;
  r["homogeneous"] = a.homogeneous;
  r["pointed"] = a.pointed;
  if (a.pointed_witness) {
    json w = json::array();
    for (const auto& x : *a.pointed_witness) w.push_back(x.get_str());
    r["pointed_witness"] = w;
  }
  r["volume"] = a.volume.get_str();
  r["cohen_macaulay"] = a.cohen_macaulay;
  r["closed_form"] = kpoly_to_string(a.closed_form.form);
  r["generic_beta"] = a.generic_beta;
  r["beta"] = rationals_to_json(a.beta);
  if (a.generic_beta) r["beta_attempts"] = a.beta_attempts;
  r["seed"] = a.seed;
  r["report"] = report_to_json(a.report);
  r["formula_match"] = a.formula_match;
  if (a.fastpath_match) r["fastpath_match"] = *a.fastpath_match;
  return r;
}

void emit_text(std::ostream& os, const json& j, int indent = 0) {
  std::string pad(indent, ' ');
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      os << pad << key << ":\n";
      emit_text(os, val, indent + 2);
    } else if (val.is_array()) {
      os << pad << key << ":";
      for (const auto& v : val)
        os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      os << "\n";
    } else if (val.is_string()) {
      os << pad << key << ": " << val.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << val.dump() << "\n";
    }
  }
}

void emit(const json& j, const std::string& out_path,
          const std::string& format) {
  std::ostringstream os;
  if (format == "text")
    emit_text(os, j);
  else
    os << j.dump(2) << "\n";
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write output file: " + out_path);
    f << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-polynomials and multidegrees of bifiltered modules"};
  app.require_subcommand(1);

  std::string input, out_path, format = "json", beta_flag, slopes_flag;
  unsigned long long seed = 20240817ULL;
  app.add_option("--seed", seed, "master random seed");
  app.add_option("--beta", beta_flag, "beta as comma-separated rationals, or 'generic'");
  app.add_option("--slopes", slopes_flag, "slopes p1/q1,p2/q2,...");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto add_verb = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("input", input, "input file")->required();
    return sub;
  };
  add_verb("toric", "toric ideal I_A of a matrix");
  add_verb("check", "homogeneity, pointedness, volume, Cohen-Macaulayness");
  add_verb("formula", "closed-form multidegree vol(A)*sum C(n-d,j-d) T1^j T2^(n-j)");
  add_verb("hypergeom", "full GKZ analysis of a matrix and beta");
  add_verb("multidegree", "K_{F,V} and multidegree of a presentation file");
  add_verb("grl", "gr^L presentations of a presentation file at given slopes");
  add_verb("scan-beta", "multidegrees of one matrix across a list of betas");

  CLI11_PARSE(app, argc, argv);
  std::string verb = app.get_subcommands()[0]->get_name();

  try {
    json result;
    result["verb"] = verb;
    result["input"] = input;

    if (verb == "toric" || verb == "check" || verb == "formula" ||
        verb == "hypergeom" || verb == "scan-beta") {
      json jin = json::parse(slurp(input));
      IntMatrix A = matrix_from_json(jin);

      if (verb == "toric") {
        json gens = json::array();
        for (const auto& p : toric_ideal(A)) gens.push_back(poly_to_string(p));
        result["generators"] = gens;
      } else if (verb == "check") {
        result["spans_lattice"] = spans_lattice(A);
        result["homogeneous"] = is_homogeneous(A);
        auto [ptd, w] = is_pointed(A);
        result["pointed"] = ptd;
        if (w) {
          json wit = json::array();
          for (const auto& x : *w) wit.push_back(x.get_str());
          result["pointed_witness"] = wit;
        }
        result["volume"] = volume(A).get_str();
        result["cohen_macaulay"] = cohen_macaulay(A);
      } else if (verb == "formula") {
        result["volume"] = volume(A).get_str();
        result["closed_form"] = kpoly_to_string(closed_form_multidegree(A).form);
      } else if (verb == "hypergeom") {
        auto beta = beta_from(jin, beta_flag, detail::mat_rows(A));
        GKZAnalysis a = analyze(A, beta, stage_seed(seed, "hypergeom"));
        result.update(analysis_to_json(a));
      } else {  // scan-beta
        if (!jin.contains("betas"))
          throw std::runtime_error("scan-beta input is missing \"betas\"");
        json runs = json::array();
        for (const auto& b : jin.at("betas")) {
          json jb;
          jb["beta"] = b;
          std::optional<std::vector<Rational>> beta;
          if (!(b.is_string() && b.get<std::string>() == "generic")) {
            std::vector<Rational> bv;
            for (const auto& v : b)
              bv.push_back(v.is_string()
                               ? Rational::parse(v.get<std::string>())
                               : Rational(static_cast<long>(v.get<long long>())));
            beta = std::move(bv);
          }
          GKZAnalysis a = analyze(A, beta, stage_seed(seed, "scan-beta"));
          jb["beta_used"] = rationals_to_json(a.beta);
          jb["multidegree"] = kpoly_to_string(a.report.multidegree.form);
          jb["nice"] = a.report.nice;
          jb["formula_match"] = a.formula_match;
          runs.push_back(std::move(jb));
        }
        result["runs"] = runs;
      }
    } else if (verb == "multidegree") {
      BifilteredPresentation M = parse_presentation(slurp(input));
      MultidegreeReport rep =
          multidegree_fv(M, stage_seed(seed, "multidegree"));
      result.update(report_to_json(rep));
    } else {  // grl
      BifilteredPresentation M = parse_presentation(slurp(input));
      if (slopes_flag.empty())
        throw std::runtime_error("grl needs --slopes p1/q1,...");
      auto slopes = parse_slopes(slopes_flag);
      json per_slope = json::array();
      for (auto [p, q] : slopes) {
        GradedPresentation G = gr_L(M, p, q);
        json js;
        js["slope"] = std::to_string(p) + "/" + std::to_string(q);
        json gens = json::array();
        for (const auto& g : G.gens)
          for (int i = 0; i < G.rank; ++i)
            if (!g[i].is_zero()) gens.push_back(poly_to_string(g[i]));
        js["generators"] = gens;
        per_slope.push_back(std::move(js));
      }
      result["slopes"] = per_slope;
      SlopeScan scan = slope_scan(M, slopes, stage_seed(seed, "grl"));
      json groups = json::array();
      for (const auto& grp : scan.groups) {
        json g = json::array();
        for (auto [p, q] : grp)
          g.push_back(std::to_string(p) + "/" + std::to_string(q));
        groups.push_back(std::move(g));
      }
      result["groups"] = groups;
    }

    emit(result, out_path, format);
    return 0;
  } catch (const std::exception& e) {
    json err;
    err["verb"] = verb;
    err["error"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
