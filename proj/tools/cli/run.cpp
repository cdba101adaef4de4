#include "cli/run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "mec/coupling_k.hpp"
#include "mec/entropy.hpp"
#include "mec/error.hpp"
#include "mec/majorization.hpp"
#include "mec/oracle.hpp"
#include "mec/report.hpp"

namespace mec::cli {

namespace {

constexpr double kGapSlack = 1e-9;

struct Loaded {
  std::optional<Distribution> p;
  std::optional<Distribution> q;
  std::vector<Distribution> dists;
};

Distribution checked(const std::string& field, const RawDistribution& raw, const Job& job,
                     const Tolerances& tol) {
  try {
    return make_distribution(raw, job.renormalize, tol);
  } catch (const Error& e) {
    throw Error(e.code(), field + ": " + e.what());
  }
}

std::vector<RawDistribution> read_list(const std::string& path, const Job& job,
                                       const std::string& key) {
  const std::string text = read_file(path);
  if (job.csv) return distributions_from_csv(text, path);
  const Json doc = parse_json(text, path);
  if (key == "dists") return distribution_list_from_json(doc, path);
  std::vector<RawDistribution> out{distribution_from_json(doc, key, path)};
  // A single file may carry both marginals.
  if (key == "p" && doc.is_object() && doc.contains("q")) {
    out.push_back(distribution_from_json(doc, "q", path));
  }
  return out;
}

Loaded load(const Job& job, const Tolerances& tol, bool need_q) {
  Loaded in;
  if (!job.dists_file.empty()) {
    const auto raw = read_list(job.dists_file, job, "dists");
    for (std::size_t k = 0; k < raw.size(); ++k) {
      in.dists.push_back(checked("dists[" + std::to_string(k) + "]", raw[k], job, tol));
    }
  }
  std::vector<RawDistribution> from_p;
  if (!job.p_file.empty()) {
    from_p = read_list(job.p_file, job, "p");
    if (from_p.empty()) throw Error(ErrorCode::kEmpty, "p: no distribution in " + job.p_file);
    in.p = checked("p", from_p[0], job, tol);
  }
  if (!job.q_file.empty()) {
    const auto raw = read_list(job.q_file, job, "q");
    if (raw.empty()) throw Error(ErrorCode::kEmpty, "q: no distribution in " + job.q_file);
    in.q = checked("q", raw[0], job, tol);
  } else if (need_q && from_p.size() > 1) {
    in.q = checked("q", from_p[1], job, tol);
  }
  if (!job.p_file.empty() || need_q) {
    if (!in.p) throw Error(ErrorCode::kBadInput, "p: --p is required");
  }
  if (need_q && !in.q) throw Error(ErrorCode::kBadInput, "q: --q is required");
  return in;
}

Json coupling_document(const SparseCoupling& m, const Distribution& p, const Distribution& q,
                       const Job& job) {
  Json doc = job.format == "dense" ? coupling_to_dense_json(m) : coupling_to_json(m);
  const Distribution z = glb(p, q);
  doc["engine"] = std::string(to_string(job.engine));
  doc["entropy_bits"] = shannon_entropy(m.values());
  doc["glb_entropy_bits"] = shannon_entropy(z);
  doc["gap_bound_bits"] = shannon_entropy(z) + 1.0;
  if (job.alpha) {
    doc["alpha"] = *job.alpha;
    doc["renyi_entropy_bits"] = renyi_entropy(m.values(), *job.alpha);
    doc["renyi_glb_entropy_bits"] = renyi_entropy(z, *job.alpha);
  }
  return doc;
}

void ensure_valid(const Validation& v) {
  if (!v) throw Error(ErrorCode::kInvariantViolation, "output check failed: " + v.diagnostic);
}

}  // namespace

Json execute(const Job& job) {
  Tolerances tol;
  if (job.tol) {
    if (!(*job.tol > 0.0) || !std::isfinite(*job.tol)) {
      throw Error(ErrorCode::kBadInput, "tol: must be a positive number");
    }
    tol.normalization = *job.tol;
  }
  if (job.alpha && job.command != "entropy" && job.command != "couple") {
    throw Error(ErrorCode::kBadInput, "alpha: only valid with entropy or couple");
  }
  if (job.format != "sparse" && job.format != "dense") {
    throw Error(ErrorCode::kBadInput, "format: expected dense or sparse");
  }
  if (job.format == "dense" && job.command != "couple") {
    throw Error(ErrorCode::kBadInput, "format: dense output is only available for couple");
  }
  CouplingOptions opts;
  opts.tol = tol;

  const std::string& cmd = job.command;
  if (cmd == "couple-k") {
    if (job.dists_file.empty()) throw Error(ErrorCode::kBadInput, "dists: --dists is required");
    const Loaded in = load(job, tol, false);
    const SparseJoint m = min_entropy_joint_k(in.dists, opts);
    ensure_valid(is_valid_joint(m, in.dists, tol.normalization));
    const double h_glb = joint_lower_bound_k(in.dists);
    Json doc = joint_to_json(m);
    doc["k"] = in.dists.size();
    doc["entropy_bits"] = shannon_entropy(m.values());
    doc["glb_entropy_bits"] = h_glb;
    doc["gap_bound_bits"] =
        h_glb + std::ceil(std::log2(static_cast<double>(in.dists.size())));
    return doc;
  }

  if (cmd == "entropy") {
    const Loaded in = load(job, tol, false);
    if (!in.p) throw Error(ErrorCode::kBadInput, "p: --p is required");
    if (job.alpha) {
      return {{"alpha", *job.alpha}, {"entropy_bits", renyi_entropy(*in.p, *job.alpha)}};
    }
    return {{"entropy_bits", shannon_entropy(*in.p)}};
  }

  const Loaded in = load(job, tol, true);
  const Distribution& p = *in.p;
  const Distribution& q = *in.q;

  if (cmd == "glb") {
    const Distribution z = glb(p, q);
    return {{"glb", z.masses()}, {"entropy_bits", shannon_entropy(z)}};
  }
  if (cmd == "couple") {
    const SparseCoupling m = min_entropy_coupling(p, q, job.engine, opts);
    ensure_valid(is_valid_coupling(m, p, q, tol.normalization));
    return coupling_document(m, p, q, job);
  }
  if (cmd == "bounds") {
    const BoundsReport r = bounds_report(p, q);
    return {{"h_p", r.h_p},
            {"h_q", r.h_q},
            {"h_glb", r.h_glb},
            {"joint_lower", r.joint_lower},
            {"mi_upper", r.mi_upper},
            {"cond_lower_x_given_y", r.cond_lower_x_given_y},
            {"cond_lower_y_given_x", r.cond_lower_y_given_x}};
  }
  if (cmd == "metric") {
    const MetricEstimate e = metric_estimate(p, q, opts);
    return {{"d_hat", e.d_hat}, {"lower", e.lower}, {"upper", e.upper}};
  }
  if (cmd == "oracle-check") {
    const OracleResult best = brute_force_min_entropy(p, q);
    const SparseCoupling m = min_entropy_coupling(p, q, job.engine, opts);
    ensure_valid(is_valid_coupling(m, p, q, tol.normalization));
    const double alg = shannon_entropy(m.values());
    const double gap = alg - best.opt_value;
    if (gap < -kGapSlack || gap > 1.0 + kGapSlack) {
      throw Error(ErrorCode::kInvariantViolation,
                  "gap " + std::to_string(gap) + " outside [0, 1]");
    }
    Json argmin = coupling_to_json(best.argmin.to_sparse());
    return {{"opt", best.opt_value},
            {"alg", alg},
            {"gap", gap},
            {"engine", std::string(to_string(job.engine))},
            {"argmin", std::move(argmin)}};
  }
  throw Error(ErrorCode::kBadInput, "unknown command '" + cmd + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-entropy couplings of discrete distributions", "mec"};
  app.require_subcommand(1);

  Job job;
  std::string engine = "sparse";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"glb", "Greatest lower bound of p and q under majorization"},
      {"couple", "Low-entropy coupling of p and q"},
      {"couple-k", "Low-entropy joint distribution of k marginals"},
      {"entropy", "Shannon (or Renyi with --alpha) entropy of p"},
      {"bounds", "Entropy and mutual-information bounds for p and q"},
      {"metric", "Estimate of the entropic distance between p and q"},
      {"oracle-check", "Compare the coupling against exhaustive search"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--p", job.p_file, "Distribution p (JSON or CSV)");
    sub->add_option("--q", job.q_file, "Distribution q (JSON or CSV)");
    sub->add_option("--dists", job.dists_file, "List of distributions for couple-k");
    sub->add_option("--alpha", job.alpha, "Renyi order");
    sub->add_option("--engine", engine, "Pairwise engine")
        ->check(CLI::IsMember({"dense", "sparse"}));
    sub->add_option("--format", job.format, "Coupling output layout")
        ->check(CLI::IsMember({"dense", "sparse"}));
    sub->add_flag("--csv", job.csv, "Inputs are CSV, one distribution per line");
    sub->add_flag("--renormalize", job.renormalize, "Scale inputs to sum to one");
    sub->add_option("--tol", job.tol, "Normalization tolerance");
    sub->add_option("--out", job.out_file, "Write the result here instead of stdout");
    sub->callback([&job, name = name] { job.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mec: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    job.engine = parse_engine(engine);
    const std::string text = execute(job).dump(2) + "\n";
    if (job.out_file.empty()) {
      out << text;
    } else {
      std::ofstream file(job.out_file, std::ios::binary);
      if (!file || !(file << text)) {
        throw Error(ErrorCode::kBadInput, "out: cannot write " + job.out_file);
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "mec: " << e.what() << "\n";
    return e.is_internal() ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "mec: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace mec::cli
