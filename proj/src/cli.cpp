#include "gkm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkm/builtins.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/dsl.hpp"
#include "gkm/errors.hpp"

namespace gkm::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad invocation; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure in a named file; exit code 2.
struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::string builtin;
  int n = -1;
  int k = -1;
  unsigned threads = 1;
};

void addInputOptions(CLI::App* sub, InputOptions& in) {
  sub->add_option("file", in.file, "graph file (DSL or JSON)");
  sub->add_option("--builtin", in.builtin, "builtin graph name");
  sub->add_option("--n", in.n, "builtin parameter n");
  sub->add_option("--k", in.k, "builtin parameter k");
  sub->add_option("--threads", in.threads, "worker threads for Hilbert series")->check(CLI::PositiveNumber);
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MomentGraph loadGraph(const InputOptions& in) {
  if (in.file.empty() == in.builtin.empty()) {
    throw UsageError("give exactly one input: a graph file or --builtin NAME");
  }
  if (!in.builtin.empty()) {
    builtins::Params params;
    if (in.n >= 0) params.n = in.n;
    if (in.k >= 0) params.k = in.k;
    return builtins::byName(in.builtin, params);
  }
  const std::string text = readFile(in.file);
  try {
    return dsl::parseGraphAuto(text);
  } catch (const ParseError& e) {
    throw FileParseError(in.file + ":" + e.what());
  }
}

GkmClass loadClass(const std::string& path, const MomentGraph& g) {
  const std::string text = readFile(path);
  try {
    return dsl::parseClass(text, g);
  } catch (const ParseError& e) {
    throw FileParseError(path + ":" + e.what());
  }
}

std::string joined(const std::vector<long>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::vector<long> asLongs(const std::vector<std::size_t>& xs) { return {xs.begin(), xs.end()}; }

Json valuesJson(const MomentGraph& g, const GkmClass& c) {
  Json out = Json::object();
  for (const auto& v : g.vertices()) out[v.name] = c.at(v.name).str();
  return out;
}

std::string edgeList(const MomentGraph& g, const std::vector<std::size_t>& edges) {
  std::string out;
  for (auto i : edges) {
    if (!out.empty()) out += ", ";
    out += edgeLabel(g.edges()[i]);
  }
  return out;
}

const char* statusText(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

int cmdValidate(const MomentGraph& g, RunResult& r) {
  const auto report = validate(g);
  for (const auto& c : report.checks) {
    r.out += c.name + ": " + statusText(c.status);
    if (!c.offenders.empty()) {
      r.out += " (";
      for (std::size_t i = 0; i < c.offenders.size(); ++i) r.out += (i ? ", " : "") + c.offenders[i];
      r.out += ")";
    }
    r.out += "\n";
  }
  if (!report.valid()) {
    r.out += "invalid\n";
    return 1;
  }
  const auto ps = palaisSmaleCheck(g);
  if (ps.holds) {
    r.out += "palais-smale: pass\n";
  } else {
    r.out += "palais-smale: FAIL (advisory) edges: " + edgeList(g, ps.violatingEdges) + "\n";
  }
  r.out += "valid\n";
  return 0;
}

int cmdHilbert(const MomentGraph& g, int maxDegree, bool json, unsigned threads, RunResult& r) {
  const auto h = hilbert(g, maxDegree < 0 ? defaultMaxDegree(g) : maxDegree, threads);
  const std::vector<long> betti = h.betti ? *h.betti : h.deconvolved;
  if (json) {
    Json out;
    out["dims"] = asLongs(h.dims);
    out["betti"] = betti;
    out["free"] = h.free;
    if (!h.free) out["diagnostic"] = h.diagnostic;
    r.out += out.dump(2) + "\n";
  } else {
    r.out += "dims: " + joined(asLongs(h.dims)) + "\n";
    r.out += "betti: " + joined(betti) + "\n";
    r.out += std::string("free: ") + (h.free ? "true" : "false (" + h.diagnostic + ")") + "\n";
  }
  return 0;
}

int cmdBetti(const MomentGraph& g, int maxDegree, unsigned threads, RunResult& r) {
  const auto h = hilbert(g, maxDegree < 0 ? defaultMaxDegree(g) : maxDegree, threads);
  if (!h.free) {
    r.err += "error: module does not look free: " + h.diagnostic + "\n";
    return 1;
  }
  r.out += joined(*h.betti) + "\n";
  return 0;
}

int cmdGenerators(const MomentGraph& g, const std::string& vertex, bool json, unsigned threads, RunResult& r) {
  std::vector<Generator> gens;
  if (!vertex.empty()) {
    if (!g.indexOf(vertex)) throw UsageError("unknown vertex '" + vertex + "'");
    auto flow = flowUpGenerator(g, vertex);
    gens.push_back(Generator{vertex, flow.cls.degree(), std::move(flow.cls), flow.ambiguity});
  } else {
    auto set = allGenerators(g, threads);
    if (!set.consistent) r.err += "warning: " + set.diagnostic + "\n";
    gens = std::move(set.generators);
  }
  if (json) {
    Json out = Json::array();
    for (const auto& gen : gens) {
      Json jg;
      jg["base"] = gen.base;
      jg["degree"] = gen.degree;
      jg["ambiguity"] = gen.ambiguity;
      jg["values"] = valuesJson(g, gen.cls);
      out.push_back(std::move(jg));
    }
    r.out += out.dump(2) + "\n";
  } else {
    for (const auto& gen : gens) {
      r.out += gen.base + " " + std::to_string(gen.degree) + " " + formatTuple(g, gen.cls);
      if (gen.ambiguity > 0) r.out += " ambiguity=" + std::to_string(gen.ambiguity);
      r.out += "\n";
    }
  }
  return 0;
}

int cmdCheck(const MomentGraph& g, const std::string& path, RunResult& r) {
  const auto c = loadClass(path, g);
  const auto check = checkClass(g, c);
  if (check.ok) {
    r.out += "ok: degree " + std::to_string(c.degree()) + " class " + formatTuple(g, c) + "\n";
    return 0;
  }
  for (const auto& v : check.badVertices) r.out += "bad vertex: " + v + "\n";
  for (auto i : check.violatedEdges) {
    const auto& e = g.edges()[i];
    r.out += "violated edge: " + edgeLabel(e) + " (" + e.direction.str() + " does not divide " +
             (c.at(e.north) - c.at(e.south)).str() + ")\n";
  }
  return 1;
}

int cmdMultiply(const MomentGraph& g, const std::vector<std::string>& paths, bool doExpand, unsigned threads,
                RunResult& r) {
  if (paths.size() != 2) throw UsageError("multiply needs exactly two --class files");
  const auto a = loadClass(paths[0], g);
  const auto b = loadClass(paths[1], g);
  const auto product = multiply(g, a, b);
  r.out += "product: " + formatTuple(g, product) + "\n";
  if (doExpand) {
    const auto gens = allGenerators(g, threads);
    if (!gens.consistent) r.err += "warning: " + gens.diagnostic + "\n";
    const auto expansion = expand(g, gens, product);
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
      if (expansion.coefficients[i].isZero()) continue;
      r.out += "  [" + gens.generators[i].base + "] * " + expansion.coefficients[i].str() + "\n";
    }
  }
  return 0;
}

int cmdOrdinary(const MomentGraph& g, bool json, unsigned threads, RunResult& r) {
  const auto gens = allGenerators(g, threads);
  if (!gens.consistent) r.err += "warning: " + gens.diagnostic + "\n";
  const auto t = ordinaryTable(g, gens);
  const std::size_t n = t.degrees.size();
  if (json) {
    Json out;
    out["generators"] = t.degrees;
    Json table = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < n; ++j) {
        Json entry = Json::array();
        for (const auto& [l, q] : t.table[i][j]) entry.push_back(Json::array({l, q.str()}));
        row.push_back(std::move(entry));
      }
      table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    r.out += out.dump(2) + "\n";
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      r.out += "[" + gens.generators[i].base + "]*[" + gens.generators[j].base + "] = ";
      if (t.table[i][j].empty()) r.out += "0";
      bool first = true;
      for (const auto& [l, q] : t.table[i][j]) {
        if (!first) r.out += " + ";
        if (q != Rational(1)) r.out += q.str() + "*";
        r.out += "[" + gens.generators[l].base + "]";
        first = false;
      }
      r.out += "\n";
    }
  }
  return 0;
}

int cmdRender(const MomentGraph& g, const std::string& outPath, RunResult& r) {
  const std::string dot = dsl::emitDot(g);
  if (outPath.empty()) {
    r.out += dot;
    return 0;
  }
  namespace fs = std::filesystem;
  const fs::path target(outPath);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) {
      r.err += "error: cannot write '" + outPath + "'\n";
      return 1;
    }
    f << dot;
    f.close();
    if (!f) {
      std::error_code ec;
      fs::remove(temp, ec);
      r.err += "error: failed writing '" + outPath + "'\n";
      return 1;
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    r.err += "error: cannot write '" + outPath + "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult r;
  CLI::App app{"GKM equivariant cohomology of moment graphs", "gkm"};
  app.require_subcommand(1, 1);

  InputOptions in;
  int maxDegree = -1;
  bool json = false;
  bool doExpand = false;
  bool list = false;
  std::string vertex;
  std::string outPath;
  std::string classPath;
  std::vector<std::string> classPaths;

  auto* validateCmd = app.add_subcommand("validate", "run the structural checks and the Palais-Smale test");
  addInputOptions(validateCmd, in);

  auto* hilbertCmd = app.add_subcommand("hilbert", "section dimensions and Betti numbers");
  addInputOptions(hilbertCmd, in);
  hilbertCmd->add_option("--max-degree", maxDegree, "largest degree computed");
  hilbertCmd->add_flag("--json", json, "JSON output");

  auto* bettiCmd = app.add_subcommand("betti", "Betti numbers of a free module");
  addInputOptions(bettiCmd, in);
  bettiCmd->add_option("--max-degree", maxDegree, "largest degree computed");

  auto* generatorsCmd = app.add_subcommand("generators", "flow-up generators");
  addInputOptions(generatorsCmd, in);
  generatorsCmd->add_option("--vertex", vertex, "only the generator based at this vertex");
  generatorsCmd->add_flag("--json", json, "JSON output");

  auto* checkCmd = app.add_subcommand("check", "check the edge conditions for a class file");
  addInputOptions(checkCmd, in);
  checkCmd->add_option("--class", classPath, "class file")->required();

  auto* multiplyCmd = app.add_subcommand("multiply", "product of two classes");
  addInputOptions(multiplyCmd, in);
  multiplyCmd->add_option("--class", classPaths, "class file (give twice)")->required();
  multiplyCmd->add_flag("--expand", doExpand, "expand the product in the generators");

  auto* ordinaryCmd = app.add_subcommand("ordinary", "ordinary cohomology multiplication table");
  addInputOptions(ordinaryCmd, in);
  ordinaryCmd->add_flag("--json", json, "JSON output");

  auto* renderCmd = app.add_subcommand("render", "Graphviz rendering");
  addInputOptions(renderCmd, in);
  renderCmd->add_option("-o,--output", outPath, "output .dot file (default stdout)");

  auto* builtinCmd = app.add_subcommand("builtin", "builtin graphs");
  builtinCmd->add_flag("--list", list, "list builtin graph names")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    r.out += out.str();
    r.err += err.str();
    r.exitCode = code == 0 ? 0 : 2;
    return r;
  }

  try {
    if (builtinCmd->parsed()) {
      for (const auto& name : builtins::catalogue()) r.out += name + "\n";
      return r;
    }
    const MomentGraph g = loadGraph(in);
    if (validateCmd->parsed()) r.exitCode = cmdValidate(g, r);
    if (hilbertCmd->parsed()) r.exitCode = cmdHilbert(g, maxDegree, json, in.threads, r);
    if (bettiCmd->parsed()) r.exitCode = cmdBetti(g, maxDegree, in.threads, r);
    if (generatorsCmd->parsed()) r.exitCode = cmdGenerators(g, vertex, json, in.threads, r);
    if (checkCmd->parsed()) r.exitCode = cmdCheck(g, classPath, r);
    if (multiplyCmd->parsed()) r.exitCode = cmdMultiply(g, classPaths, doExpand, in.threads, r);
    if (ordinaryCmd->parsed()) r.exitCode = cmdOrdinary(g, json, in.threads, r);
    if (renderCmd->parsed()) r.exitCode = cmdRender(g, outPath, r);
  } catch (const UsageError& e) {
    r.err += std::string("usage error: ") + e.what() + "\n";
    r.exitCode = 2;
  } catch (const FileParseError& e) {
    r.err += std::string("parse error: ") + e.what() + "\n";
    r.exitCode = 2;
  } catch (const std::invalid_argument& e) {
    r.err += std::string("usage error: ") + e.what() + "\n";
    r.exitCode = 2;
  } catch (const ParseError& e) {
    r.err += std::string("parse error: ") + e.what() + "\n";
    r.exitCode = 2;
  } catch (const std::exception& e) {
    r.err += std::string("error: ") + e.what() + "\n";
    r.exitCode = 1;
  }
  return r;
}

}  // namespace gkm::cli
