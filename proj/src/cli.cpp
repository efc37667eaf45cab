#include "tsl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "tsl/catalog.hpp"
#include "tsl/error.hpp"
#include "tsl/io.hpp"

namespace tsl::cli {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input;
  std::string catalog;
  std::string format = "text";
  std::string output;
  std::string direction;
  std::string reeb;
  std::optional<std::size_t> max_level;
  std::size_t order = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  bool verbose = false;
};

struct Input {
  EntryKind kind;
  Json data;
  std::string digest;
};

struct Context {
  Options opt;
  EnumerationConfig config;
  std::vector<std::string> warnings;
};

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::InvariantViolation, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return "sha256:" + hex.str();
}

EntryKind detect_kind(const Json& j) {
  if (j.is_object() && j.contains("rays")) return EntryKind::Fan;
  if (j.is_object() && j.contains("components")) return EntryKind::Bundle;
  return EntryKind::Polytope;
}

Input load_input(const Options& opt) {
  if (opt.input.empty() == opt.catalog.empty()) {
    fail(ErrorKind::InvalidInput, "exactly one of --input and --catalog is required");
  }
  if (!opt.catalog.empty()) {
    const CatalogEntry& e = catalog_entry(opt.catalog);
    return Input{e.kind, e.data, sha256_hex(io::dump(e.data))};
  }
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read input file " + opt.input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  Json data = io::parse(text);
  return Input{detect_kind(data), std::move(data), sha256_hex(text)};
}

RationalVector parse_vector(const std::string& text, std::string_view flag) {
  RationalVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    try {
      out.push_back(parse_rational(item));
    } catch (const Error&) {
      fail(ErrorKind::InvalidInput, std::string(flag) + ": malformed rational \"" + item + "\"");
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidInput, std::string(flag) + " is empty");
  return out;
}

LatticePolytope polytope_of(const Input& in) {
  switch (in.kind) {
    case EntryKind::Polytope: return io::polytope_from_json(in.data);
    case EntryKind::Fan: return moment_polytope(io::fan_from_json(in.data));
    case EntryKind::Bundle: break;
  }
  fail(ErrorKind::InvalidInput, "this command needs a polytope or a fan, not a bundle");
}

LatticePolytope anticanonical_of(const Input& in) {
  if (in.kind == EntryKind::Fan) return fano_polytope(io::fan_from_json(in.data));
  LatticePolytope p = polytope_of(in);
  if (!is_reflexive(p)) fail(ErrorKind::NotFano, "polytope is not reflexive");
  return p;
}

Json json_vectors(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::to_json(v));
  return out;
}

Json cmd_ehrhart(Context& ctx, const Input& in) {
  const LatticePolytope p = polytope_of(in);
  const RationalPolynomial e = ehrhart_polynomial(p, ctx.config);
  const std::size_t levels = ctx.opt.max_level.value_or(p.dim() + 2);
  LatticeEnumerator enumerator(p);
  Json counts = Json::array();
  for (std::size_t k = 0; k <= levels; ++k) {
    counts.push_back(io::to_json(enumerator.stats(static_cast<std::int64_t>(k), ctx.config).count));
  }
  return Json{{"polytope", io::to_json(p)},
              {"ehrhart", io::to_json(e)},
              {"volume", io::to_json(measure(p).volume)},
              {"counts", counts},
              {"is_delzant", is_delzant(p)}};
}

Json cmd_weights(Context& ctx, const Input& in) {
  const LatticePolytope p = polytope_of(in);
  const ToricPolynomials data = toric_polynomials(p, ctx.config);
  return Json{{"polytope", io::to_json(p)},
              {"weight", io::to_json(data.weight)},
              {"moment", io::to_json(data.measure.moment)},
              {"barycenter", io::to_json(data.measure.barycenter)}};
}

Json cmd_obstruct(Context& ctx, const Input& in) {
  const LatticePolytope p = polytope_of(in);
  if (!is_delzant(p)) fail(ErrorKind::InvalidInput, "obstruct needs an integral Delzant polytope");
  const std::size_t m = p.dim();
  const ToricPolynomials data = toric_polynomials(p, ctx.config);
  const ObstructionReport report = ono_vectors(data);
  const std::size_t levels = ctx.opt.max_level.value_or(m + 2);
  if (levels < 1) fail(ErrorKind::InvalidInput, "--max-level must be at least 1");

  Json chow = Json::array();
  bool all_pass = true;
  for (std::size_t i = 1; i <= levels; ++i) {
    const bool pass = chow_level_test(p, static_cast<std::int64_t>(i), ctx.config);
    all_pass = all_pass && pass;
    chow.push_back(Json{{"level", i}, {"passes", pass}});
  }
  Json out{{"obstruction", io::to_json(report)}, {"chow_levels", chow}};
  if (levels >= m + 2) {
    out["ono_identity_holds"] = report.all_zero == all_pass;
    ensure(report.all_zero == all_pass, "obstruction vectors and per-level Chow tests disagree");
  }

  if (!ctx.opt.direction.empty()) {
    const RationalVector c = parse_vector(ctx.opt.direction, "--direction");
    const ExpansionPair e = toric_expansions(data, c);
    Json f = Json::array();
    for (std::size_t ell = 1; ell <= m; ++ell) f.push_back(io::to_json(f_ell(e, ell)));
    Json weights = Json::array();
    for (std::size_t k = 1; k <= levels; ++k) {
      weights.push_back(Json{{"k", k}, {"value", io::to_json(chow_weight(e, static_cast<std::int64_t>(k)))}});
    }
    out["direction"] = io::to_json(c);
    out["expansion"] = io::to_json(e);
    out["f_ell"] = f;
    out["chow_weights"] = weights;
    out["hilbert_weight"] = io::to_json(hilbert_weight_table(e, m + 2, m + 2));
  }
  return out;
}

Json cmd_fano(Context& ctx, const Input& in) {
  if (in.kind != EntryKind::Fan) fail(ErrorKind::InvalidInput, "fano needs a fan");
  const FanoReport r = chow_obstruction_report(io::fan_from_json(in.data), ctx.opt.order, ctx.config);
  if (r.ke_but_obstructed()) {
    ctx.warnings.push_back("Kaehler-Einstein but not asymptotically Chow semistable: obstruction vectors are nonzero");
  }
  return io::to_json(r);
}

Json cmd_hilbert(Context& ctx, const Input& in) {
  const LatticePolytope p = anticanonical_of(in);
  const std::size_t k_max = ctx.opt.max_level.value_or(3);
  const std::vector<Integer> dims = level_dimensions(p, k_max, ctx.config);
  const ToricPolynomials data = toric_polynomials(p, ctx.config);
  bool slices_match = true;
  Json levels = Json::array();
  for (std::size_t k = 0; k < dims.size(); ++k) {
    levels.push_back(io::to_json(dims[k]));
    if (Rational(dims[k]) != data.ehrhart(Rational(static_cast<long>(k)))) slices_match = false;
  }
  ensure(slices_match, "level dimensions disagree with the Ehrhart polynomial of P*");
  const auto functionals = laurent_functionals(data, ctx.opt.order);
  const ObstructionReport ono = ono_vectors(data);
  Json out{{"level_dimensions", levels},
           {"laurent_functionals", json_vectors(functionals)},
           {"obstruction_vectors", json_vectors(ono.ono_vectors)},
           {"span_check", io::to_json(span_compare(functionals, ono.ono_vectors))}};
  if (!ctx.opt.reeb.empty()) {
    const ReebDirection d = reeb_direction(p, parse_vector(ctx.opt.reeb, "--reeb"));
    out["reeb"] = Json{{"b", io::to_json(d.b)}, {"in_reeb_cone", d.in_reeb_cone}};
  }
  return out;
}

Json cmd_projbundle(Context& ctx, const Input& in) {
  if (in.kind != EntryKind::Bundle) fail(ErrorKind::InvalidInput, "projbundle needs a bundle description");
  const BundleSpec spec = io::bundle_from_json(in.data);
  const BundleFunctional f = f_ell_bundle(spec);
  const std::size_t levels = ctx.opt.max_level.value_or(5);
  Json weights = Json::array();
  for (std::size_t k = 1; k <= levels; ++k) {
    weights.push_back(Json{{"k", k}, {"value", io::to_json(chow_weight_bundle(spec, static_cast<std::int64_t>(k)))}});
  }
  for (const auto& w : f.warnings) ctx.warnings.push_back(w);
  return Json{{"measures", io::to_json(bundle_measures(spec))}, {"f_ell", io::to_json(f)}, {"chow_weights", weights}};
}

Json cmd_catalog(Context& ctx) {
  if (!ctx.opt.catalog.empty()) {
    const CatalogEntry& e = catalog_entry(ctx.opt.catalog);
    return Json{{"name", e.name}, {"kind", std::string(to_string(e.kind))}, {"provenance", e.provenance}, {"data", e.data}};
  }
  Json entries = Json::array();
  for (const auto& e : load_catalog()) {
    entries.push_back(Json{{"name", e.name}, {"kind", std::string(to_string(e.kind))}, {"provenance", e.provenance}});
  }
  return Json{{"entries", entries}};
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

// Array of objects sharing one key set with scalar or short inline values.
bool is_record_table(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_object() || j.front().empty()) return false;
  return std::all_of(j.begin(), j.end(), [&](const Json& row) {
    if (!row.is_object() || row.size() != j.front().size()) return false;
    for (const auto& [key, value] : row.items()) {
      if (!j.front().contains(key)) return false;
      if (!is_scalar(value) && !(value.is_array() && std::all_of(value.begin(), value.end(), is_scalar))) return false;
    }
    return true;
  });
}

// Rectangular array of scalar rows, at least two of them.
bool is_matrix(const Json& j) {
  if (!j.is_array() || j.size() < 2 || !j.front().is_array() || j.front().empty()) return false;
  return std::all_of(j.begin(), j.end(), [&](const Json& row) {
    return row.is_array() && row.size() == j.front().size() && std::all_of(row.begin(), row.end(), is_scalar);
  });
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  if (is_matrix(j)) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat(x) && (!x.is_array() || x.size() <= 8); });
}

std::string flat_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + flat_text(j[i]);
  return s + "]";
}

void render_table(const std::vector<std::vector<std::string>>& cells, std::ostream& out, const std::string& pad) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line = pad;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_record_table(j)) {
    std::vector<std::vector<std::string>> cells(1);
    for (const auto& [key, value] : j.front().items()) cells[0].push_back(key);
    for (const auto& row : j) {
      cells.emplace_back();
      for (const auto& key : cells[0]) cells.back().push_back(flat_text(row[key]));
    }
    render_table(cells, out, pad);
    return;
  }
  if (is_matrix(j)) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : j) {
      cells.emplace_back();
      for (const auto& x : row) cells.back().push_back(scalar_text(x));
    }
    render_table(cells, out, pad);
    return;
  }
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << std::left << std::setw(static_cast<int>(width)) << key << "  " << flat_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_flat(j[i])) {
        out << pad << "- " << flat_text(j[i]) << "\n";
      } else {
        out << pad << "- [" << i << "]\n";
        render_text(j[i], out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(const Options& opt, const Json& report, std::ostream& out) {
  std::ostringstream text;
  if (opt.format == "json") {
    text << io::dump(report);
  } else {
    text << "command  " << flat_text(report["command"]) << "\n";
    if (!report["input_digest"].is_null()) text << "input    " << report["input_digest"].get<std::string>() << "\n";
    if (!report["results"].is_null()) {
      text << "\n";
      render_text(report["results"], text, 0);
    }
    for (const auto& w : report["warnings"]) text << "\nwarning: " << w.get<std::string>() << "\n";
    if (report.contains("error")) {
      text << "\nerror (" << report["error"]["kind"].get<std::string>() << "): "
           << report["error"]["message"].get<std::string>() << "\n";
    }
  }
  if (opt.output.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidInput, "cannot write output file " + opt.output);
  file << text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Toric stability obstructions in exact arithmetic", "tsl"};
  app.require_subcommand(1, 1);
  app.add_option("--input", opt.input, "JSON file with a polytope, fan or bundle");
  app.add_option("--catalog", opt.catalog, "Name of an embedded catalog entry");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", opt.output, "Write the report to this file instead of standard output");
  app.add_option("--max-level", opt.max_level, "Highest level k for level sweeps");
  app.add_option("--order", opt.order, "Number of Laurent coefficients (default m+2)");
  app.add_option("--budget", opt.budget, "Enumeration cap on candidate points");
  app.add_option("--threads", opt.threads, "Enumeration threads (0 = hardware concurrency)");
  app.add_option("--direction", opt.direction, "Comma-separated rational direction c for obstruct");
  app.add_option("--reeb", opt.reeb, "Comma-separated rational vector b for the Reeb cone check");
  app.add_flag("--verbose", opt.verbose, "Timing information on standard error");
  const std::pair<const char*, const char*> commands[] = {
      {"ehrhart", "Ehrhart polynomial and lattice counts"},
      {"weights", "Weight polynomial s(k) and moments"},
      {"obstruct", "Obstruction vectors, per-level Chow tests and expansions"},
      {"fano", "Kaehler-Einstein verdict and Chow obstruction report for a Fano fan"},
      {"hilbert", "Level dimensions and Laurent functionals of the anticanonical cone"},
      {"projbundle", "Chow weight and F_l of a projectivized bundle over a curve"},
      {"catalog", "List the embedded catalog or show one entry"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->fallthrough()->callback([&opt, n = std::string(name)] { opt.command = n; });
  }

  Json report{{"command", args}, {"input_digest", nullptr}, {"results", nullptr}, {"warnings", Json::array()}};
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Context ctx{opt, {}, {}};
  int code = 0;
  try {
    ctx.config = EnumerationConfig::from_environment();
    if (opt.budget) ctx.config.budget = *opt.budget;
    ctx.config.threads = opt.threads;
    Json results;
    if (opt.command == "catalog") {
      results = cmd_catalog(ctx);
    } else {
      const Input in = load_input(opt);
      report["input_digest"] = in.digest;
      if (opt.command == "ehrhart") results = cmd_ehrhart(ctx, in);
      else if (opt.command == "weights") results = cmd_weights(ctx, in);
      else if (opt.command == "obstruct") results = cmd_obstruct(ctx, in);
      else if (opt.command == "fano") results = cmd_fano(ctx, in);
      else if (opt.command == "hilbert") results = cmd_hilbert(ctx, in);
      else results = cmd_projbundle(ctx, in);
    }
    report["results"] = std::move(results);
  } catch (const Error& e) {
    code = is_internal(e.kind()) ? 2 : 1;
    report["error"] = Json{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = 2;
    report["error"] = Json{{"kind", "InternalError"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  report["warnings"] = ctx.warnings;
  report["exit_code"] = code;

  try {
    emit(opt, report, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (opt.verbose) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "elapsed " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }
  return code;
}

}  // namespace tsl::cli
