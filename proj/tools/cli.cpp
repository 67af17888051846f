#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <type_traits>

#include "conekit/classify.hpp"
#include "conekit/error.hpp"
#include "conekit/homology.hpp"
#include "conekit/models.hpp"
#include "conekit/pfaffian.hpp"
#include "conekit/t1.hpp"

namespace conekit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input;
  std::string model;
  std::string field = "32003";
  std::string format = "json";
  std::string manifest;
  std::uint64_t seed = 1;
  bool timings = false;
  std::size_t max_pairs = 1'000'000;
  std::size_t max_size = 2'000'000;
  std::size_t max_strand = 200'000;
};

struct Report {
  Json json = Json::object();
  std::string text;
};

struct Run {
  Common common;
  CoefficientField field = CoefficientField::default_field();
  std::uint64_t seed = 1;
  std::optional<std::string> input_text;
  Json bounds = Json::object();
};

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto bad = [&] { return DomainError("bad-range", "expected a range like -4..4, got '" + text + "'"); };
  if (dots == std::string::npos) throw bad();
  try {
    std::size_t used = 0;
    int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw bad();
    std::string rest = text.substr(dots + 2);
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw bad();
    if (lo > hi) throw bad();
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("unreadable-input", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load_document(Run& run) {
  const auto& c = run.common;
  if (!c.input.empty() && !c.model.empty())
    throw DomainError("conflicting-input", "use either --input or --model, not both");
  if (!c.input.empty()) run.input_text = read_file(c.input);
  else if (!c.model.empty()) run.input_text = models::document(c.model, run.seed);
  else throw DomainError("missing-input", "an --input file or a --model name is required");
  return parse_document(*run.input_text, run.field);
}

template <class Fn>
auto with_field(const CoefficientField& field, Fn&& fn) {
  if (field.is_prime()) return fn(std::type_identity<PrimeField>{});
  return fn(std::type_identity<RationalField>{});
}

template <class F>
Json poly_list(const std::vector<Polynomial<F>>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

template <class F>
Report cmd_gb(Run& run) {
  run.bounds["max_pairs"] = run.common.max_pairs;
  auto doc = load_document(run);
  auto ideal = models::first_ideal<F>(doc);
  const auto& gb = ideal.groebner({.max_pairs = run.common.max_pairs});
  Report r;
  const auto& ring = ideal.ring();
  r.json["ring"] = {{"variables", ring.names()}, {"weights", ring.weights()}, {"field", ring.field().name()}};
  r.json["order"] = GroebnerBasis<F>::order_name();
  r.json["basis"] = poly_list(gb.polynomials());
  std::uint32_t top = 0;
  for (const auto& p : gb.polynomials()) top = std::max(top, p.degree());
  auto hf = gb.hilbert_function(0, top);
  Json dims = Json::object();
  for (std::uint32_t d = 0; d <= top; ++d) dims[std::to_string(d)] = hf.at(static_cast<int>(d));
  r.json["dims"] = dims;
  Json leads = Json::array();
  for (const auto& m : gb.leading_monomials()) leads.push_back(ideal.ring().monomial_to_string(m));
  r.json["leading_monomials"] = leads;
  r.json["hilbert_numerator"] = gb.hilbert_numerator();
  r.json["krull_dimension"] = gb.krull_dimension();
  std::vector<std::string> lines;
  for (const auto& p : gb.polynomials()) lines.push_back(p.to_string());
  r.text = join_lines(lines);
  return r;
}

template <class F>
Report cmd_hilbert(Run& run, const std::string& range) {
  auto [lo, hi] = parse_range(range);
  if (lo < 0) throw DomainError("bad-range", "Hilbert function degrees must be non-negative");
  run.bounds["range"] = {lo, hi};
  run.bounds["max_pairs"] = run.common.max_pairs;
  auto doc = load_document(run);
  auto ideal = models::first_ideal<F>(doc);
  const auto& gb = ideal.groebner({.max_pairs = run.common.max_pairs});
  auto hf = gb.hilbert_function(static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi));
  Report r;
  r.json["range"] = {lo, hi};
  r.json["values"] = hf.values();
  r.json["hilbert_numerator"] = gb.hilbert_numerator();
  r.json["krull_dimension"] = gb.krull_dimension();
  r.json["a_invariant"] = a_invariant(ideal);
  std::ostringstream t;
  for (int d = lo; d <= hi; ++d) t << "HF(" << d << ") = " << hf.at(d) << "\n";
  r.text = t.str();
  return r;
}

template <class F>
Report cmd_t1(Run& run, const std::string& range, const std::string& method, bool check_isolated) {
  auto [lo, hi] = parse_range(range);
  run.bounds["range"] = {lo, hi};
  auto doc = load_document(run);
  auto ideal = models::first_ideal<F>(doc);
  T1Options opt;
  opt.seed = run.seed;
  opt.check_isolated = check_isolated;
  opt.max_problem_size = run.common.max_size;
  run.bounds["max_problem_size"] = opt.max_problem_size;
  T1Report rep;
  if (method == "auto") rep = t1_auto(ideal, lo, hi, opt);
  else if (method == "hyp") {
    if (ideal.size() != 1) throw DomainError("not-hypersurface", "method 'hyp' needs exactly one generator");
    rep = t1_hypersurface(ideal.generators().front(), lo, hi, opt);
  } else if (method == "ci") rep = t1_complete_intersection(ideal, lo, hi, opt);
  else rep = t1_graded(ideal, lo, hi, opt);
  Report r;
  r.json["method"] = method_name(rep.method);
  r.json["center"] = rep.center;
  r.json["range"] = {lo, hi};
  r.json["dims"] = rep.dims.values();
  r.json["seed"] = rep.seed;
  r.json["field"] = rep.field.name();
  r.json["syzygy_bound"] = rep.syzygy_bound;
  if (rep.center - lo == hi - rep.center) r.json["symmetric"] = check_t1_symmetry(rep, rep.center).ok;
  else r.json["symmetric"] = nullptr;
  std::ostringstream t;
  t << "method " << method_name(rep.method) << ", center " << rep.center << "\n";
  for (int k = lo; k <= hi; ++k) t << "T1(" << k << ") = " << rep.dims.at(k) << "\n";
  r.text = t.str();
  return r;
}

Json betti_json(const BettiTable& table) {
  Json rows = Json::array();
  for (int q = 0; q <= table.q_max(); ++q) {
    Json row = Json::array();
    for (int p = 0; p <= table.p_max(); ++p) {
      auto v = table.at(p, q);
      if (v) row.push_back(*v);
      else row.push_back("unknown");
    }
    rows.push_back(row);
  }
  Json j;
  j["p_max"] = table.p_max();
  j["q_max"] = table.q_max();
  j["rows"] = rows;
  return j;
}

template <class F>
Report cmd_betti(Run& run, int p_max, int q_max) {
  run.bounds["p_max"] = p_max;
  run.bounds["q_max"] = q_max;
  auto doc = load_document(run);
  auto ideal = models::first_ideal<F>(doc);
  HomologyOptions opt;
  opt.max_strand = run.common.max_strand;
  run.bounds["max_strand"] = opt.max_strand;
  auto table = betti_table(ideal, p_max, q_max, opt);
  auto euler = euler_check(table, ideal);
  Report r;
  r.json["table"] = betti_json(table);
  r.json["euler_check"] = {{"ok", euler.ok}, {"degrees", euler.degrees_checked}};
  r.text = table.to_string();
  return r;
}

template <class F>
Report cmd_wahl(Run& run, int q_max, std::optional<int> genus) {
  auto doc = load_document(run);
  auto ideal = models::first_ideal<F>(doc);
  int p_max = 2;
  if (genus) p_max = std::max(p_max, *genus - 3);
  run.bounds["p_max"] = p_max;
  run.bounds["q_max"] = q_max;
  run.bounds["max_strand"] = run.common.max_strand;
  auto table = betti_table(ideal, p_max, q_max, {.max_strand = run.common.max_strand});
  auto res = wahl_criterion(table);
  Report r;
  r.json["holds"] = res.holds;
  r.json["reason"] = res.reason;
  if (genus) r.json["koszul_duality"] = koszul_duality_check(table, *genus);
  r.json["table"] = betti_json(table);
  r.text = std::string(res.holds ? "holds" : "fails") + ": " + res.reason + "\n" + table.to_string();
  return r;
}

struct PfaffArgs {
  std::vector<std::string> deform;
  std::string mode = "affine";
  std::size_t sample = 0;
  std::optional<std::size_t> expected_dim;
};

template <class F>
Report cmd_pfaff(Run& run, const PfaffArgs& args) {
  auto doc = load_document(run);
  if (doc.matrices.empty()) throw DomainError("missing-matrix", "input has no skewmatrix block");
  auto m = skew_matrix_from_block<F>(doc.ring, doc.matrices.front());
  const auto& ring = doc.ring;
  Report r;
  auto pf = normalize_for_display(pfaffians_4x4(m));
  r.json["pfaffians"] = poly_list(pf);
  r.text = format_polynomials(pf) + "\n";
  if (auto t = m.doubled_twists()) r.json["doubled_twists"] = *t;

  if (args.deform.empty() && args.sample == 0) return r;
  F field = field_of<F>(*ring);
  typename F::Element lambda = field.zero();
  std::vector<Polynomial<F>> h(3, Polynomial<F>(ring));
  for (const auto& kv : args.deform) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw DomainError("bad-deform", "expected key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    auto p = parse_poly<F>(ring, value).poly;
    if (key == "lambda") {
      if (!p.is_constant()) throw DomainError("bad-deform", "lambda must be a constant");
      lambda = p.coefficient(Monomial{});
    } else if (key == "h1" || key == "h2" || key == "h3") {
      h[static_cast<std::size_t>(key[1] - '1')] = p;
    } else {
      throw DomainError("bad-deform", "unknown deformation key '" + key + "'");
    }
  }
  DeformMode mode;
  if (args.mode == "affine") mode = DeformMode::Affine;
  else if (args.mode == "projective") mode = DeformMode::ProjectiveCone;
  else throw DomainError("bad-mode", "mode must be affine or projective");
  auto md = deform_matrix(m, lambda, h, mode);
  auto polys = normalize_for_display(pfaffians_4x4(md));
  Json d;
  d["mode"] = mode_name(mode);
  d["pfaffians"] = poly_list(polys);
  std::vector<typename F::Element> origin(ring->num_vars(), field.zero());
  auto jr = jacobian_rank_at(polys, origin);
  d["origin_on_variety"] = jr.on_variety;
  d["jacobian_rank_at_origin"] = jr.rank;
  r.text += "deformed (" + mode_name(mode) + "): " + format_polynomials(polys) + "\n";
  r.text += "Jacobian rank at origin: " + std::to_string(jr.rank) + (jr.on_variety ? "" : " (origin not on variety)") + "\n";

  if (args.sample > 0) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      std::size_t n = ring->num_vars();
      std::size_t dim = args.expected_dim ? *args.expected_dim : (n >= 3 ? n - 3 : 0);
      run.bounds["sample_points"] = args.sample;
      run.bounds["expected_dim"] = dim;
      auto v = smoothness_sample(polys, dim, args.sample, run.seed);
      Json s;
      s["status"] = status_name(v.status);
      s["points_sampled"] = v.points_sampled;
      s["slices_tried"] = v.slices_tried;
      if (v.witness) {
        s["witness"] = *v.witness;
        s["witness_rank"] = *v.witness_rank;
      }
      d["sample"] = s;
      r.text += "sampling: " + status_name(v.status) + " after " + std::to_string(v.points_sampled) + " points\n";
    } else {
      throw DomainError("field-mismatch", "smoothness sampling needs a prime field");
    }
  }
  r.json["deformation"] = d;
  return r;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["subject"] = subject_name(v.subject.kind);
  j["value"] = v.subject.value;
  j["answer"] = answer_name(v.answer);
  j["caveats"] = v.caveats;
  j["citations"] = v.citations;
  return j;
}

Report verdict_report(const Verdict& v) {
  Report r;
  r.json["verdict"] = verdict_json(v);
  r.text = answer_name(v.answer) + "\n";
  for (const auto& c : v.caveats) r.text += "note: " + c + "\n";
  return r;
}

Report cmd_fano(int g) {
  auto t = higher_index_table(g);
  Report r;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"genus", row.genus}, {"model", row.model}, {"index", row.index}, {"description", row.description}});
    r.text += row.model + "\tindex " + std::to_string(row.index) + "\t" + row.description + "\n";
  }
  r.json["genus"] = g;
  r.json["rows"] = rows;
  if (!t.note.empty()) {
    r.json["note"] = t.note;
    r.text += t.note + "\n";
  }
  return r;
}

void add_common(CLI::App* sub, Common& c, bool needs_input) {
  if (needs_input) {
    sub->add_option("--input,-i", c.input, "input file in the conekit text format");
    sub->add_option("--model", c.model, "built-in model instead of an input file");
    sub->add_option("--field", c.field, "coefficient field: QQ or a prime")->capture_default_str();
  }
  sub->add_option("--seed", c.seed, "random seed (CONEKIT_SEED overrides)")->capture_default_str();
  sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  sub->add_option("--manifest", c.manifest, "write the run manifest here instead of stderr");
  sub->add_flag("--timings", c.timings, "include wall-clock timings in the report");
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("bad-seed", "CONEKIT_SEED must be a non-negative integer, got '" + text + "'");
  return v;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("hash-failure", "SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Environment environment_from_process() {
  Environment env;
  if (const char* s = std::getenv("CONEKIT_SEED")) env.seed_override = s;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  auto started = std::chrono::steady_clock::now();
  CLI::App app{"Graded deformations, Betti tables and Pfaffian formats for cones over projective varieties", "conekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Run state;
  Common& c = state.common;
  std::string range = "-4..4", method = "auto", hilbert_range = "0..10";
  bool check_isolated = false;
  int p_max = 3, q_max = 3, wahl_q = 3, genus = 0, degree = 0, dim = 0;
  std::optional<int> wahl_genus;
  PfaffArgs pfaff;
  std::string model_name;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb, c, true);
  gb->add_option("--max-pairs", c.max_pairs, "cap on critical pairs")->capture_default_str();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and series data");
  add_common(hilbert, c, true);
  hilbert->add_option("--max-pairs", c.max_pairs, "cap on critical pairs")->capture_default_str();
  hilbert->add_option("--range", hilbert_range, "degrees lo..hi")->capture_default_str();
  auto* t1 = app.add_subcommand("t1", "graded pieces of T^1 of the affine cone");
  add_common(t1, c, true);
  t1->add_option("--max-size", c.max_size, "cap on any single linear system")->capture_default_str();
  t1->add_option("--range", range, "degrees lo..hi")->capture_default_str();
  t1->add_option("--method", method, "auto, hyp, ci or normal")
      ->check(CLI::IsMember({"auto", "hyp", "ci", "normal"}))
      ->capture_default_str();
  t1->add_flag("--check-isolated", check_isolated, "verify the vertex is an isolated singularity");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers via Koszul cohomology");
  add_common(betti, c, true);
  betti->add_option("--max-strand", c.max_strand, "cap on strand matrix size; larger cells are unknown")->capture_default_str();
  betti->add_option("--pmax", p_max, "largest homological degree")->capture_default_str();
  betti->add_option("--qmax", q_max, "largest strand")->capture_default_str();
  auto* wahl = app.add_subcommand("wahl", "resolution-shape criterion for T^1(k) = 0, k <= -2");
  add_common(wahl, c, true);
  wahl->add_option("--max-strand", c.max_strand, "cap on strand matrix size")->capture_default_str();
  wahl->add_option("--qmax", wahl_q, "largest strand examined")->capture_default_str();
  wahl->add_option("--genus", wahl_genus, "also check the Koszul duality equivalence for this genus");
  auto* pf = app.add_subcommand("pfaff", "4x4 Pfaffians of a 5x5 skew matrix and their deformations");
  add_common(pf, c, true);
  pf->add_option("--deform", pfaff.deform, "lambda=.. h1=.. h2=.. h3=..");
  pf->add_option("--mode", pfaff.mode, "affine or projective")
      ->check(CLI::IsMember({"affine", "projective"}))
      ->capture_default_str();
  pf->add_option("--sample", pfaff.sample, "number of points for smoothness sampling");
  pf->add_option("--expected-dim", pfaff.expected_dim, "affine dimension of the deformed variety");
  auto* classify = app.add_subcommand("classify", "smoothability verdicts");
  classify->require_subcommand(1);
  auto* k3 = classify->add_subcommand("k3", "cone over a general K3 surface");
  add_common(k3, c, false);
  k3->add_option("--genus", genus, "genus g >= 2")->required();
  auto* ell = classify->add_subcommand("elliptic", "cone over an elliptic curve");
  add_common(ell, c, false);
  ell->add_option("--degree", degree, "degree d >= 1")->required();
  auto* ab = classify->add_subcommand("abelian", "cone over an abelian variety");
  add_common(ab, c, false);
  ab->add_option("--dim", dim, "dimension n >= 1")->required();
  auto* fano = app.add_subcommand("fano-table", "higher-index Fano 3-folds through K3 surfaces of genus g");
  add_common(fano, c, false);
  fano->add_option("--genus", genus, "genus g")->required();
  auto* model = app.add_subcommand("model", "print a built-in model in the input format");
  add_common(model, c, false);
  model->add_option("name", model_name, "model name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 1;
  }

  std::string subcommand;
  for (auto* s : app.get_subcommands()) {
    subcommand = s->get_name();
    for (auto* inner : s->get_subcommands()) subcommand += " " + inner->get_name();
  }

  int code = 0;
  Report report;
  try {
    state.seed = env.seed_override ? parse_seed(*env.seed_override) : c.seed;
    state.field = CoefficientField::parse(c.field);
    if (gb->parsed()) report = with_field(state.field, [&](auto t) { return cmd_gb<typename decltype(t)::type>(state); });
    else if (hilbert->parsed())
      report = with_field(state.field, [&](auto t) { return cmd_hilbert<typename decltype(t)::type>(state, hilbert_range); });
    else if (t1->parsed())
      report = with_field(state.field, [&](auto t) {
        return cmd_t1<typename decltype(t)::type>(state, range, method, check_isolated);
      });
    else if (betti->parsed())
      report = with_field(state.field, [&](auto t) { return cmd_betti<typename decltype(t)::type>(state, p_max, q_max); });
    else if (wahl->parsed())
      report = with_field(state.field, [&](auto t) { return cmd_wahl<typename decltype(t)::type>(state, wahl_q, wahl_genus); });
    else if (pf->parsed())
      report = with_field(state.field, [&](auto t) { return cmd_pfaff<typename decltype(t)::type>(state, pfaff); });
    else if (k3->parsed()) report = verdict_report(classify_k3_cone(genus));
    else if (ell->parsed()) report = verdict_report(classify_elliptic_cone(degree));
    else if (ab->parsed()) report = verdict_report(classify_abelian_cone(dim));
    else if (fano->parsed()) report = cmd_fano(genus);
    else if (model->parsed()) {
      state.input_text = models::document(model_name, state.seed);
      report.text = *state.input_text;
      report.json["document"] = *state.input_text;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    code = 1;
  } catch (const DomainError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    code = 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    code = 2;
  }

  double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  if (code == 0) {
    if (c.format == "text") {
      out << report.text;
    } else {
      Json j;
      j["schema"] = kSchema;
      j["command"] = subcommand;
      for (auto& [k, v] : report.json.items()) j[k] = v;
      if (c.timings) j["timings"] = {{"total_ms", elapsed_ms}};
      out << j.dump(2) << "\n";
    }
  }

  Json manifest;
  manifest["schema"] = kSchema;
  manifest["tool_version"] = kToolVersion;
  manifest["subcommand"] = subcommand;
  manifest["input_sha256"] = state.input_text ? Json(sha256_hex(*state.input_text)) : Json(nullptr);
  manifest["seed"] = state.seed;
  manifest["field"] = state.field.name();
  manifest["bounds"] = state.bounds;
  manifest["exit_code"] = code;
  manifest["wall_time_ms"] = elapsed_ms;
  if (!c.manifest.empty()) {
    std::ofstream mf(c.manifest);
    if (!mf) {
      err << "error: unwritable-manifest: cannot write '" << c.manifest << "'\n";
      return code == 0 ? 1 : code;
    }
    mf << manifest.dump(2) << "\n";
  } else {
    err << manifest.dump() << "\n";
  }
  return code;
}

}  // namespace conekit::cli
