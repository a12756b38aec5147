#include "majorana/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <ostream>

#include <CLI11.hpp>

#include "majorana/canonical.hpp"
#include "majorana/classify.hpp"
#include "majorana/errors.hpp"
#include "majorana/io.hpp"
#include "majorana/plot.hpp"

namespace majorana::cli {

namespace {

using io::Json;

struct Result {
  Json document;
  int status = kOk;
  std::string error;
};

using Job = std::function<Result(const std::string& path)>;

Result guarded(const Job& job, const std::string& path) {
  try {
    return job(path);
  } catch (const std::exception& e) {
    return {Json(), kFailure, e.what()};
  }
}

std::string render(const Json& doc, bool text) {
  if (!text || !doc.is_object()) return io::dump(doc);
  std::string out;
  for (const auto& [key, value] : doc.items()) {
    if (!out.empty()) out += '\n';
    out += key + ": " + (value.is_string() ? value.get<std::string>() : io::dump(value));
  }
  return out;
}

int emit(const std::vector<std::string>& labels, const std::vector<Result>& results, bool text, std::ostream& out,
         std::ostream& err) {
  int status = kOk;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.status == kFailure) {
      err << "error";
      if (!labels[i].empty()) err << " (" << labels[i] << ")";
      err << ": " << r.error << "\n";
    } else {
      out << render(r.document, text) << "\n";
    }
    status = std::max(status, r.status);
  }
  return status;
}

std::vector<std::string> read_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open batch list " + path);
  std::vector<std::string> paths;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (!line.empty() && line[0] != '#') paths.push_back(line);
  }
  return paths;
}

SymmetricStated load_state(const std::string& path) { return io::parse_any_state(io::read_file(path)); }

MoebiusMapd load_map(const std::string& path) { return MoebiusMapd(io::parse_matrix(io::read_file(path))); }

Json certificate_document(const SymmetricStated& s1, const SymmetricStated& s2, double tol) {
  const auto w = cocircularity_witness(majorana_roots(s1), majorana_roots(s2), tol);
  if (!w) return Json();
  Json j = Json::object();
  j["circle_counts"] = Json::array({w->first.counts(), w->second.counts()});
  return j;
}

Result equivalence(const SymmetricStated& s1, const SymmetricStated& s2, EquivalenceKind kind, double tol) {
  const auto decision = decide_equivalence(s1, s2, kind, tol);
  Json j = Json::object();
  j["kind"] = to_string(kind);
  j["equivalent"] = decision.witness.has_value();
  if (decision.witness) {
    j["witness"] = io::matrix_document(decision.witness->map.matrix());
    return {j, kOk, {}};
  }
  j["stage"] = to_string(decision.stage);
  j["candidates_tried"] = decision.candidates_tried;
  j["partitions"] = Json::array({cluster_roots(majorana_roots(s1), tol).configuration().partition,
                                 cluster_roots(majorana_roots(s2), tol).configuration().partition});
  j["certificate"] = certificate_document(s1, s2, tol);
  return {j, kInequivalent, {}};
}

Json decomposition_document(const MoebiusMapd& m) {
  const auto d = decompose_affine(m);
  Json j = Json::object();
  j["alpha"] = io::complex_pair(d.alpha());
  j["beta"] = io::complex_pair(d.beta());
  j["A"] = d.affine.scale;
  j["B"] = io::complex_pair(d.affine.offset);
  j["lambda"] = d.lambda;
  return j;
}

Json classification_document(const SymmetricStated& s, double tol) {
  const auto dc = cluster_roots(majorana_roots(s), tol).configuration();
  Json j = Json::object();
  j["n"] = s.n();
  j["partition"] = dc.partition;
  j["diversity"] = dc.diversity();
  j["label"] = dc.label();
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorana representation toolkit for symmetric multiqubit states", "majorana"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = kDefaultTolerance;
  std::string format = "json";
  std::string batch;
  app.add_option("--tol", tol, "Chordal tolerance for clustering and matching")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--batch", batch, "File with one input path per line, processed concurrently");

  std::string input, second, matrix_path, svg_path, kind = "slocc";
  bool circles = false;

  auto* roots = app.add_subcommand("roots", "Majorana roots of a state");
  roots->add_option("input", input, "State document");
  auto* from_roots = app.add_subcommand("from-roots", "State with the given Majorana roots");
  from_roots->add_option("input", input, "Roots document");
  auto* classify = app.add_subcommand("classify", "Degeneracy configuration of a state");
  classify->add_option("input", input, "State document");
  auto* canonical = app.add_subcommand("canonical", "Canonical representative (n <= 5)");
  canonical->add_option("input", input, "State document");
  auto* equiv = app.add_subcommand("equiv", "Decide SLOCC or LOCC equivalence of two states");
  equiv->add_option("--kind", kind, "Equivalence kind")->check(CLI::IsMember({"slocc", "locc"}))->capture_default_str();
  equiv->add_option("first", input, "First state document")->required();
  equiv->add_option("second", second, "Second state document")->required();
  auto* transform = app.add_subcommand("transform", "Apply a matrix to every qubit of a state");
  transform->add_option("--matrix", matrix_path, "Matrix document")->required();
  transform->add_option("input", input, "State document");
  auto* decompose = app.add_subcommand("decompose", "Split a map into a rotation and an affine map");
  decompose->add_option("--matrix", matrix_path, "Matrix document");
  auto* plot = app.add_subcommand("plot", "Draw the Majorana points as SVG");
  plot->add_option("input", input, "State document")->required();
  plot->add_option("--svg", svg_path, "Output SVG path")->required();
  plot->add_flag("--circles", circles, "Overlay circles through three or more points");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  const bool text = format == "text";
  try {
    if (equiv->parsed()) {
      if (!batch.empty()) throw DomainError("--batch is not supported by equiv");
      const auto k = kind == "locc" ? EquivalenceKind::locc : EquivalenceKind::slocc;
      const Result r = guarded(
          [&](const std::string&) { return equivalence(load_state(input), load_state(second), k, tol); }, "");
      return emit({""}, {r}, text, out, err);
    }
    if (plot->parsed()) {
      if (!batch.empty()) throw DomainError("--batch is not supported by plot");
      const Result r = guarded(
          [&](const std::string&) {
            const auto r = majorana_roots(load_state(input));
            const auto sites = cluster_roots(r, tol);
            const auto sig = circle_signature(r, tol);
            const std::string svg = render_svg(make_plot_spec(sites, circles ? &sig : nullptr));
            std::ofstream f(svg_path);
            if (!f || !(f << svg)) throw IoError("cannot write " + svg_path);
            Json j = Json::object();
            j["svg"] = svg_path;
            j["points"] = static_cast<int>(sites.sites.size());
            return Result{j, kOk, {}};
          },
          "");
      return emit({""}, {r}, text, out, err);
    }

    Job job;
    if (roots->parsed()) {
      job = [](const std::string& p) { return Result{io::roots_document(majorana_roots(load_state(p))), kOk, {}}; };
    } else if (from_roots->parsed()) {
      job = [](const std::string& p) {
        return Result{io::state_document(state_from_roots(io::parse_roots(io::read_file(p)))), kOk, {}};
      };
    } else if (classify->parsed()) {
      job = [tol](const std::string& p) { return Result{classification_document(load_state(p), tol), kOk, {}}; };
    } else if (canonical->parsed()) {
      job = [tol](const std::string& p) {
        return Result{io::canonical_document(canonicalize(load_state(p), tol)), kOk, {}};
      };
    } else if (transform->parsed()) {
      const auto m = load_map(matrix_path);
      job = [m](const std::string& p) { return Result{io::state_document(apply_symmetric(m, load_state(p))), kOk, {}}; };
    } else {
      // decompose: the matrix path is the input (or the batch entries).
      if (batch.empty() && matrix_path.empty()) throw DomainError("decompose requires --matrix");
      if (batch.empty()) input = matrix_path;
      job = [](const std::string& p) { return Result{decomposition_document(load_map(p)), kOk, {}}; };
    }

    if (batch.empty()) {
      if (input.empty()) throw DomainError("an input document is required");
      return emit({""}, {guarded(job, input)}, text, out, err);
    }
    const auto paths = read_list(batch);
    std::vector<std::future<Result>> pending;
    for (const auto& p : paths) pending.push_back(std::async(std::launch::async, guarded, job, p));
    std::vector<Result> results;
    for (auto& f : pending) results.push_back(f.get());
    return emit(paths, results, text, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace majorana::cli
