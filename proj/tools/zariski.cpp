// zariski: certificates for strata, constructions, verification, linking and
// group computations. Exit status: 0 all checks pass, 1 a check failed or a
// computation raised, 2 usage error.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "zariski/corpus.hpp"
#include "zariski/groups/builtin.hpp"
#include "zariski/groups/consequence.hpp"
#include "zariski/groups/nilpotent.hpp"
#include "zariski/groups/pipelines.hpp"
#include "zariski/groups/snf.hpp"
#include "zariski/groups/todd_coxeter.hpp"
#include "zariski/holonomy.hpp"
#include "zariski/json_io.hpp"

namespace {

using namespace zariski;
using io::json;
namespace gio = io::groups_io;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kSeed = 20240531;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::InvalidOperand, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

// Accumulates results and named checks for one invocation.
struct Job {
  json results = json::object();
  json checks = json::array();
  std::string inputs;  // canonical input bytes for the digest
  bool failed = false;

  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    failed = failed || !pass;
  }
};

CurveSpec load_curve(const std::string& path, Job& job) {
  std::string text = read_file(path);
  job.inputs += text;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidOperand, std::string("curve file is not JSON: ") + e.what());
  }
  // accept a construct certificate as input
  if (j.contains("results") && j["results"].contains("curve")) j = j["results"]["curve"];
  try {
    return io::curve_from(j);
  } catch (const json::exception& e) {
    raise(ErrorCode::InvalidOperand, std::string("malformed curve: ") + e.what());
  }
}

std::string zeta_text(const RootOfUnity& z) { return z.to_string(); }

// ---------------------------------------------------------------- strata

void cmd_strata(int d, Job& job) {
  auto strata = enumerate_strata(d);
  json list = json::array();
  int realizable = 0;
  for (const auto& s : strata) {
    list.push_back({{"zeta", io::to_json(s.zeta)}, {"realizable", s.realizable}});
    realizable += s.realizable ? 1 : 0;
  }
  job.results["d"] = d;
  job.results["strata"] = list;
  job.results["tuple_size"] = strata.size();
  job.results["realizable_count"] = realizable;
  json arith = json::array();
  for (int m = 5; m <= d; ++m)
    if (d % m == 0 && m != 6) arith.push_back({{"m", m}, {"tuple_size", arithmetic_tuple_size(m)}});
  job.results["arithmetic_tuples"] = arith;
  job.check("tuple_size", static_cast<int>(strata.size()) == d / 2 + 1, "floor(d/2)+1 = " + std::to_string(d / 2 + 1));
  for (const auto& a : arith) {
    int m = a["m"].get<int>();
    int coprime = 0;
    for (int k = 1; k <= m; ++k) coprime += std::gcd(k, m) == 1 ? 1 : 0;
    job.check("arithmetic_m" + std::to_string(m), a["tuple_size"].get<int>() * 2 == coprime);
  }
}

// ---------------------------------------------------------------- curves

void embed_hat_checks(const CurveSpec& c, const RootOfUnity& label, Job& job) {
  RootOfUnity xi = linking_exact(c);
  job.results["linking_exact"] = io::to_json(xi);
  job.results["linking_class"] = io::to_json(half_plane_class(xi, c.d));
  job.check("linking_matches_label", half_plane_class(xi, c.d) == label,
            "linking " + zeta_text(half_plane_class(xi, c.d)) + ", label " + zeta_text(label));
}

void cmd_construct(int d, int variant, const std::vector<int>& taus, const std::string& t_text, const std::string& curve_out, Job& job) {
  if (taus.size() != 3) raise(ErrorCode::PrecondViolation, "--taus needs three exponents");
  std::array<RootOfUnity, 3> roots{RootOfUnity(2 * d, taus[0]), RootOfUnity(2 * d, taus[1]), RootOfUnity(2 * d, taus[2])};
  job.results["d"] = d;
  job.results["variant"] = variant;
  job.results["taus"] = json::array({io::to_json(roots[0]), io::to_json(roots[1]), io::to_json(roots[2])});
  CurveSpec curve;
  std::optional<RootOfUnity> predicted;
  if (!t_text.empty()) {
    Rational t(t_text);
    t.canonicalize();
    job.results["t"] = io::to_json(t);
    curve = degeneration_member(d, roots, t);
  } else {
    auto k = kummer_construct(d, roots, variant);
    curve = k.curve;
    job.results["fermat_model"] = io::to_json(k.fermat_model);
    job.results["change"] = io::to_json(k.change);
    job.results["degenerate"] = k.degenerate;
    job.results["predicted_raw"] = io::to_json(k.predicted);
    if (!k.degenerate) predicted = half_plane_class(k.predicted, d);
  }
  job.results["curve"] = io::to_json(curve);
  if (!curve_out.empty()) write_atomic(curve_out, io::to_json(curve).dump(2) + "\n");
  auto v = verify_hat(curve);
  job.results["verification"] = io::to_json(v);
  if (predicted) {
    job.results["predicted"] = io::to_json(*predicted);
    job.check("label_matches_prediction", v.label.zeta == *predicted, "label " + zeta_text(v.label.zeta) + ", predicted " + zeta_text(*predicted));
  }
  job.check("realizable", v.label.realizable);
  embed_hat_checks(curve, v.label.zeta, job);
}

void cmd_verify(const std::string& path, Job& job) {
  CurveSpec c = load_curve(path, job);
  job.results["curve"] = io::to_json(c);
  if (c.family == Family::Hat || c.family == Family::ArtalShirane) {
    auto v = verify_hat(c);
    job.results["verification"] = io::to_json(v);
    job.check("member", true, "hat label " + zeta_text(v.label.zeta));
    embed_hat_checks(c, v.label.zeta, job);
    if (c.family == Family::ArtalShirane) {
      auto t = artal_shirane_type(c);
      job.results["type"] = {{"d", t.d}, {"multiplicities", t.multiplicities}};
    }
  } else {
    auto v = verify_sigma(c);
    job.results["verification"] = io::to_json(v);
    job.check("member", true, std::string(to_string(c.family)) + " label " + zeta_text(v.label.zeta));
    if (c.family == Family::Tilde) {
      // the Cremona image is a hat curve carrying the same class
      CurveSpec hat = cremona_map(c);
      auto h = verify_hat(hat);
      job.results["cremona_image"] = io::to_json(hat);
      job.check("cremona_label", h.label.zeta == v.label.zeta, "hat side " + zeta_text(h.label.zeta));
    }
  }
}

void cmd_link(const std::string& path, int steps, double clearance, double tolerance, Job& job) {
  CurveSpec c = load_curve(path, job);
  job.inputs += " steps=" + std::to_string(steps);
  auto v = verify_hat(c);
  job.results["label"] = io::to_json(v.label);
  embed_hat_checks(c, v.label.zeta, job);
  json ends = json::array();
  for (int s = 1; s <= 3; ++s) ends.push_back(io::to_json(lift_endpoint_check(c, v, s)));
  job.results["lift_endpoints"] = ends;
  if (steps > 0) {
    NumericOptions opt;
    opt.steps = steps;
    opt.clearance = clearance;
    opt.tolerance = tolerance;
    auto num = linking_numeric(c, v, auto_cycle(c, v), opt);
    double err = std::abs(num.estimate - linking_exact(c).to_complex());
    job.results["numeric"] = {{"steps", steps},
                              {"clearance", clearance},
                              {"tolerance", tolerance},
                              {"estimate", io::complex_json(num.estimate)},
                              {"error", err},
                              {"track", io::to_json(num.track)}};
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(2) << "|numeric - exact| = " << err;
    job.check("numeric_matches_exact", err < tolerance, detail.str());
  }
}

// ---------------------------------------------------------------- groups

struct GroupOptions {
  std::string name;
  int d = 2;
  int h = 0;
  std::string presentation;
  bool order = false;
  bool derived = false;
  bool abelianization = false;
  bool witness = false;
  bool rs_check = false;
  std::vector<std::string> consequences;
  std::vector<std::string> central;
  int depth = 6;
  std::size_t beam = 4000;
  std::size_t coset_cap = 1000000;
};

std::optional<std::string> expected_abelianization(const std::string& name, int d) {
  auto pow = [](const std::string& g, int n) { return n == 1 ? g : g + "^" + std::to_string(n); };
  std::string zd = "Z/" + std::to_string(d);
  if (name == "G") return "Z^5";
  if (name == "Gtilde") return "Z^2 + " + zd + " + " + zd + " + " + zd;
  if (name == "K1hat") return "Z^2 + " + zd;
  if (name == "Ktilde") return pow("Z", d + 1);
  if (name == "Kh" || name == "TriplePoint" || name == "Artin244") return "Z^3";
  if (name == "B3S2") return "Z/4";
  return std::nullopt;
}

void cmd_group(const GroupOptions& o, Job& job) {
  using namespace groups;
  Presentation p;
  if (!o.presentation.empty()) {
    p = parse_presentation(o.presentation);
    job.inputs += o.presentation;
  } else {
    p = builtin_presentation(o.name, o.d, o.h > 0 ? std::optional<int>(o.h) : std::nullopt);
  }
  job.results["name"] = o.presentation.empty() ? o.name : "custom";
  job.results["d"] = o.d;
  if (o.h > 0) job.results["h"] = o.h;
  job.results["presentation"] = gio::to_json(p);
  bool any = o.order || o.derived || o.witness || o.rs_check || !o.consequences.empty() || !o.central.empty();

  if (o.abelianization || !any) {
    IntMatrix m = relation_matrix(p);
    AbelianInvariants a = abelianize(p);
    json ab = gio::to_json(a);
    ab["relation_matrix"] = gio::to_json(m);
    if (!m.empty()) {
      auto s = smith_normal_form(m, static_cast<std::size_t>(p.rank()));
      json diag = json::array();
      for (std::size_t i = 0; i < s.rank; ++i) diag.push_back(io::integer_json(s.d[i][i]));
      ab["smith_diagonal"] = diag;
      ab["u"] = gio::to_json(s.u);
      ab["v"] = gio::to_json(s.v);
    }
    job.results["abelianization"] = ab;
    if (o.presentation.empty())
      if (auto e = expected_abelianization(o.name, o.d)) job.check("abelianization", a.to_string() == *e, a.to_string() + ", expected " + *e);
  }
  if (o.order || o.derived) {
    auto t = todd_coxeter(p, {}, o.coset_cap);
    job.results["coset_table"] = gio::to_json(t);
    job.check("enumeration_complete", t.complete(), "cap " + std::to_string(o.coset_cap));
    if (t.complete()) {
      job.results["order"] = t.index();
      if (o.presentation.empty() && o.name == "B3S2") job.check("order", t.index() == 12, std::to_string(t.index()));
      if (o.derived) {
        auto series = derived_series_finite(t);
        job.results["derived_series"] = series;
        if (o.presentation.empty() && o.name == "B3S2") job.check("derived_series", series == std::vector<std::size_t>{12, 3, 1});
      }
    }
  }
  SearchOptions sopt;
  sopt.beam = o.beam;
  for (const auto& text : o.consequences) {
    Word w = parse_word(text, p.generators);
    auto r = consequence_search(p, w, o.depth, sopt);
    json entry = gio::to_json(r, p);
    entry["word"] = text;
    job.results["consequences"].push_back(entry);
    job.check("consequence " + text, r.proved());
  }
  for (const auto& g : o.central) {
    auto r = central_in_class2_quotient(p, g);
    job.results["central"].push_back({{"generator", g}, {"central", r.central}, {"failing", r.failing}});
    job.check("central_class2 " + g, r.central, r.failing.empty() ? "" : "fails against " + r.failing.front());
  }
  if (o.witness) {
    if (o.name != "Kh" || !o.presentation.empty()) raise(ErrorCode::BadParameters, "--witness applies to the builtin Kh");
    for (const auto& w : kh_abelian_witness(o.d, o.h, o.depth, sopt)) {
      json entry = gio::to_json(w.result, p);
      entry["commutator"] = w.name;
      job.results["witness"].push_back(entry);
      job.check("witness " + w.name, w.result.proved());
    }
  }
  if (o.rs_check) {
    if (o.name != "K1hat" || !o.presentation.empty()) raise(ErrorCode::BadParameters, "--rs-check applies to the builtin K1hat");
    Presentation derived = derived_k1hat(o.d);
    job.results["derived_presentation"] = gio::to_json(derived);
    auto a = abelianize(derived), b = abelianize(p);
    job.results["derived_abelianization"] = gio::to_json(a);
    job.check("derived_abelianization", a == b, a.to_string() + " vs " + b.to_string());
    for (const auto& rc : relators_as_consequences(derived, p, o.depth, sopt)) {
      json entry = gio::to_json(rc.result, derived);
      entry["relator"] = rc.label;
      job.results["relators"].push_back(entry);
      job.check("relator " + rc.label, rc.result.proved());
    }
  }
}

// ---------------------------------------------------------------- driver

struct Invocation {
  int exit = 0;
  json certificate;
  std::string text;  // human summary
};

json envelope(const std::vector<std::string>& args, const Job& job, const std::string& status, const json& error) {
  json cert = {{"tool", "zariski"},
               {"version", kVersion},
               {"command", args},
               {"inputs_digest", sha256_hex(job.inputs)},
               {"seed", kSeed},
               {"status", status},
               {"results", job.results},
               {"checks", job.checks}};
  if (!error.is_null()) cert["error"] = error;
  cert["body_digest"] = sha256_hex(cert.dump());
  return cert;
}

std::string summarize(const json& cert) {
  std::ostringstream out;
  out << "status: " << cert["status"].get<std::string>() << "\n";
  for (const auto& c : cert["checks"]) {
    out << (c["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << c["name"].get<std::string>();
    if (c.contains("detail")) out << "  (" << c["detail"].get<std::string>() << ")";
    out << "\n";
  }
  if (cert.contains("error")) out << "  error " << cert["error"]["code"].get<std::string>() << ": " << cert["error"]["message"].get<std::string>() << "\n";
  return out.str();
}

int run_batch(const std::string& jobfile, int jobs, const std::string& outdir, bool quiet);

Invocation invoke(const std::vector<std::string>& args) {
  Invocation inv;
  CLI::App app{"Certificates for cyclotomic curve strata and their group computations", "zariski"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string output;
  app.add_flag("--json", as_json, "print the certificate as JSON");
  app.add_option("-o,--output", output, "write the certificate to a file");

  int d = 2;
  auto* strata = app.add_subcommand("strata", "strata labels for degree d");
  strata->add_option("d", d)->required()->check(CLI::PositiveNumber);

  int variant = 1;
  std::vector<int> taus;
  std::string t_text, curve_out;
  auto* construct = app.add_subcommand("construct", "Kummer construction or degeneration member");
  construct->add_option("d", d)->required();
  construct->add_option("--variant", variant)->check(CLI::Range(1, 3));
  construct->add_option("--taus", taus, "exponents k of zeta_{2d}^k (odd)")->delimiter(',')->required();
  construct->add_option("--t", t_text, "degeneration parameter p/q");
  construct->add_option("--curve-out", curve_out, "write the curve JSON");

  std::string path;
  auto* verify = app.add_subcommand("verify", "verify a curve file");
  verify->add_option("curve", path)->required();

  int steps = 0;
  double clearance = 1e-3, tolerance = 1e-8;
  auto* link = app.add_subcommand("link", "linking invariant of a hat curve");
  link->add_option("curve", path)->required();
  link->add_option("--numeric,--steps", steps, "numeric continuation steps per segment (0 = exact only)")->check(CLI::NonNegativeNumber);
  link->add_option("--clearance", clearance);
  link->add_option("--tolerance", tolerance);

  GroupOptions g;
  auto* group = app.add_subcommand("group", "group presentation checks");
  group->set_help_flag("--help", "Print this help message and exit");
  group->add_option("name", g.name, "builtin name: G Gtilde K1hat Ktilde Kh TriplePoint B3S2 Artin244");
  group->add_option("--d", g.d);
  group->add_option("--h", g.h);
  group->add_option("--presentation", g.presentation, "gens: ... ; rels: ...");
  group->add_flag("--order", g.order);
  group->add_flag("--derived-series", g.derived);
  group->add_flag("--abelianization", g.abelianization);
  group->add_flag("--witness", g.witness, "Kh commutator certificates");
  group->add_flag("--rs-check", g.rs_check, "K1hat from Gtilde by Reidemeister-Schreier");
  group->add_option("--consequence", g.consequences, "word to certify")->allow_extra_args(false);
  group->add_option("--central", g.central, "generator to test in the class-2 quotient");
  group->add_option("--depth", g.depth)->check(CLI::PositiveNumber);
  group->add_option("--beam", g.beam)->check(CLI::PositiveNumber);
  group->add_option("--coset-cap", g.coset_cap)->check(CLI::PositiveNumber);

  std::string jobfile, outdir = ".";
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  auto* batch = app.add_subcommand("batch", "run a job file in parallel");
  batch->add_option("jobfile", jobfile)->required();
  batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  batch->add_option("--outdir", outdir);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    inv.text = app.help();
    return inv;
  } catch (const CLI::ParseError& e) {
    inv.exit = 2;
    inv.text = std::string("usage error: ") + e.what() + "\n";
    return inv;
  }
  if (group->parsed() && g.name.empty() && g.presentation.empty()) {
    inv.exit = 2;
    inv.text = "usage error: group needs a name or --presentation\n";
    return inv;
  }
  if (batch->parsed()) {
    inv.exit = run_batch(jobfile, jobs, outdir, !as_json);
    return inv;
  }

  Job job;
  json error;
  std::string status;
  for (const auto& a : args) job.inputs += a + '\0';
  try {
    if (strata->parsed()) cmd_strata(d, job);
    if (construct->parsed()) cmd_construct(d, variant, taus, t_text, curve_out, job);
    if (verify->parsed()) cmd_verify(path, job);
    if (link->parsed()) cmd_link(path, steps, clearance, tolerance, job);
    if (group->parsed()) cmd_group(g, job);
    status = job.failed ? "fail" : "pass";
  } catch (const Error& e) {
    status = "error";
    std::string code(to_string(e.code())), what = e.what();
    if (what.rfind(code + ": ", 0) == 0) what = what.substr(code.size() + 2);
    error = {{"code", code}, {"message", what}};
  }
  inv.certificate = envelope(args, job, status, error);
  inv.exit = status == "pass" ? 0 : 1;
  if (!output.empty()) write_atomic(output, inv.certificate.dump(2) + "\n");
  inv.text = as_json ? inv.certificate.dump(2) + "\n" : summarize(inv.certificate);
  return inv;
}

std::vector<std::string> split_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> std::quoted(tok)) out.push_back(tok);
  return out;
}

int run_batch(const std::string& jobfile, int jobs, const std::string& outdir, bool quiet) {
  std::ifstream in(jobfile);
  if (!in) {
    std::cerr << "cannot read " << jobfile << "\n";
    return 2;
  }
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto args = split_line(line);
    if (!args.empty() && args[0][0] != '#') lines.push_back(args);
  }
  fs::create_directories(outdir);
  std::vector<int> exits(lines.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex io_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      Invocation r = invoke(lines[i]);
      exits[i] = r.exit;
      std::ostringstream name;
      name << std::setw(3) << std::setfill('0') << i << "_" << lines[i][0] << ".json";
      if (!r.certificate.is_null()) write_atomic(fs::path(outdir) / name.str(), r.certificate.dump(2) + "\n");
      std::lock_guard lock(io_mutex);
      if (!quiet || r.exit != 0) std::cerr << name.str() << ": exit " << r.exit << "\n";
      if (r.certificate.is_null()) std::cerr << r.text;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, static_cast<int>(lines.size())); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  int worst = 0;
  for (int e : exits) worst = std::max(worst, e);
  std::cout << lines.size() << " jobs, " << std::count(exits.begin(), exits.end(), 0) << " passed\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Invocation r = invoke(args);
  (r.exit == 2 ? std::cerr : std::cout) << r.text;
  return r.exit;
}
