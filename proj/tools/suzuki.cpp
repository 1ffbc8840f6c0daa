#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "suzuki/classify.hpp"
#include "suzuki/nichols.hpp"

using namespace suzuki;
using nlohmann::json;

namespace {

struct Globals {
  int N = 1;
  int n = 1;
  int mu = 1;
  int lambda = 1;
  std::string out;
  std::string format = "json";
  int max_degree = 12;
  int primes = 2;
};

class BadArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw BadArgument("cannot open " + g.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string params_string(const std::string& family, const std::vector<int>& p) {
  auto names = param_names(family);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ";" : "") << names[i] << "=" << p[i];
  return os.str();
}

SuzukiParams params_of(const Globals& g) {
  SuzukiParams P{g.N, g.n, g.mu, g.lambda};
  try {
    P.validate();
  } catch (const std::exception& e) {
    throw BadArgument(e.what());
  }
  return P;
}

json params_json(const SuzukiParams& P) { return {{"N", P.N}, {"n", P.n}, {"mu", P.mu}, {"lambda", P.lambda}}; }

int run_catalog(const Globals& g) {
  SuzukiAlgebra A(params_of(g));
  auto cat = build_catalog(A);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "label,family,dim,source,duplicate_of\n";
    for (const auto& y : cat.modules)
      os << csv_field(y.label()) << "," << y.family << "," << y.dim << "," << csv_field(y.source) << ","
         << csv_field(y.duplicate_of.value_or("")) << "\n";
    emit(g, os.str());
  } else {
    json j;
    j["report"] = to_json(cat.report);
    j["modules"] = json::array();
    for (const auto& y : cat.modules) j["modules"].push_back(to_json(A, y));
    emit(g, j.dump(2));
  }
  return 0;
}

int print_rows(const Globals& g, const SuzukiParams& P, const std::vector<SummaryRow>& rows) {
  if (g.format == "csv") {
    std::ostringstream os;
    os << "label,params,kind,dim\n";
    for (const auto& r : rows)
      os << csv_field(r.label) << "," << csv_field(params_string(r.family, r.params)) << ","
         << to_string(r.verdict.kind) << "," << r.verdict.dim_string() << "\n";
    emit(g, os.str());
  } else {
    json j;
    j["params"] = params_json(P);
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    emit(g, j.dump(2));
  }
  return 0;
}

int run_classify(const Globals& g, const std::string& label) {
  SuzukiAlgebra A(params_of(g));
  auto rows = theorem_summary(A);
  if (!label.empty()) {
    std::vector<SummaryRow> pick;
    for (const auto& r : rows)
      if (r.label == label) pick.push_back(r);
    if (pick.empty()) throw BadArgument("no module labelled " + label);
    rows = pick;
  }
  return print_rows(g, A.params(), rows);
}

int run_summary(const Globals& g, bool all) {
  SuzukiAlgebra A(params_of(g));
  std::vector<SummaryRow> rows;
  for (auto& r : theorem_summary(A))
    if (all || r.verdict.finite()) rows.push_back(std::move(r));
  return print_rows(g, A.params(), rows);
}

int run_nichols(const Globals& g, const std::string& label, const std::string& braiding_file) {
  if (label.empty() == braiding_file.empty()) throw BadArgument("give exactly one of --label or --braiding");
  if (g.max_degree < 2) throw BadArgument("--max-degree must be at least 2");
  if (g.primes < 1) throw BadArgument("--primes must be positive");
  MonomialBraiding c;
  json params;
  std::string name;
  if (!label.empty()) {
    SuzukiAlgebra A(params_of(g));
    auto cat = build_catalog(A);
    const YDModule* y = cat.find(label);
    if (!y) throw BadArgument("no module labelled " + label);
    c = derive_braiding(A, *y);
    params = params_json(A.params());
    name = label;
  } else {
    std::ifstream f(braiding_file);
    if (!f) throw BadArgument("cannot read " + braiding_file);
    json j;
    try {
      j = json::parse(f);
    } catch (const std::exception& e) {
      throw BadArgument(std::string("bad braiding JSON: ") + e.what());
    }
    try {
      int L = 1;
      for (const auto& e : j.at("entries")) L = std::max(L, e.at("scalar").at("order").get<int>());
      c = braiding_from_json(j, CycOrder::get(L));
    } catch (const nlohmann::json::exception& e) {
      throw BadArgument(std::string("bad braiding JSON: ") + e.what());
    }
    if (!c.invertible()) throw BadArgument("braiding is not invertible");
    name = braiding_file;
  }
  NicholsOptions opt;
  opt.max_degree = g.max_degree;
  opt.primes = g.primes;
  auto rep = hilbert_series(c, opt);
  rep.label = name;
  if (g.format == "csv") {
    std::ostringstream os;
    os << "degree,rank,certification\n";
    for (std::size_t k = 0; k < rep.ranks.size(); ++k)
      os << k << "," << rep.ranks[k] << "," << to_string(rep.certification[k]) << "\n";
    emit(g, os.str());
  } else {
    json j = rep.to_json("x");
    j["params"] = params;
    emit(g, j.dump(2));
  }
  return 0;
}

int run_verify(const Globals& g) {
  SuzukiAlgebra A(params_of(g));
  json out;
  out["params"] = params_json(A.params());
  auto hopf = check_hopf_axioms(A);
  out["hopf_checks"] = hopf.checks;
  if (!hopf.ok) {
    out["failure"] = {{"stage", "hopf"}, {"axiom", hopf.axiom}, {"witness", hopf.witness}};
    emit(g, out.dump(2));
    return 1;
  }
  auto cat = build_catalog(A);
  if (!cat.report.complete()) {
    out["failure"] = {{"stage", "catalog"}, {"report", to_json(cat.report)}};
    emit(g, out.dump(2));
    return 1;
  }
  int n_yd = 0, n_yb = 0, n_cf = 0;
  for (const auto& y : cat.modules) {
    auto r = verify_yd(A, y);
    if (!r.ok) {
      out["failure"] = {{"stage", "yetter-drinfeld"}, {"label", y.label()}, {"axiom", r.axiom}, {"witness", r.witness}};
      emit(g, out.dump(2));
      return 1;
    }
    ++n_yd;
    auto c = derive_braiding(A, y);
    auto yb = yang_baxter(c);
    if (!yb.ok) {
      out["failure"] = {{"stage", "yang-baxter"}, {"label", y.label()}, {"triple", yb.triple}};
      emit(g, out.dump(2));
      return 1;
    }
    ++n_yb;
    if (y.family != "K" && y.family != "M") {
      auto m = closed_form_mismatch(A, y, c);
      if (!m.empty()) {
        out["failure"] = {{"stage", "closed-form"}, {"label", y.label()}, {"detail", m}, {"derived", to_json(c)}};
        emit(g, out.dump(2));
        return 1;
      }
      ++n_cf;
    }
  }
  out["catalog"] = to_json(cat.report);
  out["yd_verified"] = n_yd;
  out["yang_baxter_verified"] = n_yb;
  out["closed_forms_matched"] = n_cf;
  out["ok"] = true;
  emit(g, out.dump(2));
  return 0;
}

int run_search(const Globals& g, const std::string& family, long long dim, const std::string& kind, int n_min,
               int n_max, const std::vector<int>& Ns) {
  if (family != "H" && family != "I") throw BadArgument("--family must be H or I");
  if (n_min < 1 || n_max < n_min || Ns.empty()) throw BadArgument("bad search ranges");
  for (int N : Ns)
    if (N < 1) throw BadArgument("N values must be positive");
  if (g.mu != 1 && g.mu != -1) throw BadArgument("--mu must be 1 or -1");
  if (g.lambda != 1 && g.lambda != -1) throw BadArgument("--lambda must be 1 or -1");
  SearchRanges R;
  R.n_min = n_min;
  R.n_max = n_max;
  R.Ns = Ns;
  auto pred = [&](const Verdict& v) {
    if (dim > 0 && (!v.dim || *v.dim != dim)) return false;
    if (!kind.empty() && to_string(v.kind) != kind) return false;
    return dim > 0 || !kind.empty() || v.finite();
  };
  auto hits = search_tuples(family[0], g.mu, g.lambda, pred, R);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "tuple,kind,dim\n";
    for (const auto& h : hits)
      os << csv_field(h.tuple.to_string()) << "," << to_string(h.verdict.kind) << "," << h.verdict.dim_string() << "\n";
    emit(g, os.str());
  } else {
    json j = json::array();
    for (const auto& h : hits) j.push_back({{"tuple", h.tuple.to_string()}, {"verdict", to_json(h.verdict)}});
    emit(g, json{{"family", family}, {"mu", g.mu}, {"lambda", g.lambda}, {"hits", j}}.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Suzuki Hopf algebras: Yetter-Drinfeld catalog, braidings and Nichols algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--N", g.N, "first algebra index N")->capture_default_str();
  app.add_option("--n", g.n, "second algebra index is 2n+1")->capture_default_str();
  app.add_option("--mu", g.mu, "mu in {1,-1}")->capture_default_str();
  app.add_option("--lambda", g.lambda, "lambda in {1,-1}")->capture_default_str();
  app.add_option("--out", g.out, "write output to this path");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--max-degree", g.max_degree, "highest degree for Nichols ranks")->capture_default_str();
  app.add_option("--primes", g.primes, "number of primes for modular ranks")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "list every simple Yetter-Drinfeld module");
  auto* classify = app.add_subcommand("classify", "classify the Nichols algebra of each module");
  std::string label;
  classify->add_option("--label", label, "restrict to one module label");
  auto* nichols = app.add_subcommand("nichols", "Hilbert series of a Nichols algebra");
  std::string nlabel, braiding_file;
  nichols->add_option("--label", nlabel, "catalog label, e.g. L[s=1,k=0,p=1,q=0]");
  nichols->add_option("--braiding", braiding_file, "braiding JSON file");
  auto* verify = app.add_subcommand("verify", "check Hopf axioms, YD axioms, Yang-Baxter and closed forms");
  auto* search = app.add_subcommand("search", "search (n,N,s,t,j,k,p) tuples of the V_abe families");
  std::string family = "H", kind;
  long long dim = 0;
  int n_min = 1, n_max = 2;
  std::vector<int> Ns = {1, 2, 3, 4, 5, 6};
  search->add_option("--family", family, "H or I")->capture_default_str();
  search->add_option("--dim", dim, "keep tuples with this dimension");
  search->add_option("--kind", kind, "keep tuples with this verdict kind");
  search->add_option("--n-min", n_min)->capture_default_str();
  search->add_option("--n-max", n_max)->capture_default_str();
  search->add_option("--Ns", Ns, "values of N to scan")->delimiter(',');
  auto* summary = app.add_subcommand("summary", "finite-dimensional Nichols algebras over the algebra");
  bool all = false;
  summary->add_flag("--all", all, "include infinite and unknown rows");
  for (auto* sc : {catalog, classify, nichols, verify, search, summary}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (catalog->parsed()) return run_catalog(g);
    if (classify->parsed()) return run_classify(g, label);
    if (nichols->parsed()) return run_nichols(g, nlabel, braiding_file);
    if (verify->parsed()) return run_verify(g);
    if (search->parsed()) return run_search(g, family, dim, kind, n_min, n_max, Ns);
    if (summary->parsed()) return run_summary(g, all);
  } catch (const BadArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
