#include "lsext/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lsext {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const CodeParameters& p) {
  return ordered_json{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"q", p.q}, {"label", p.to_string()}};
}

std::string vector_string(const KVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].code);
  }
  return out + ")";
}

ordered_json step_json(const StepRecord& r) {
  ordered_json j;
  j["operation"] = r.operation;
  j["l"] = r.l;
  j["s"] = r.s;
  j["outcome"] = std::string(to_string(r.outcome));
  j["before"] = params_json(r.before);
  j["after"] = r.after ? params_json(*r.after) : ordered_json(nullptr);
  j["gap_before"] = r.gap_before ? ordered_json(*r.gap_before) : ordered_json(nullptr);
  j["columns"] = r.columns;
  ordered_json vecs = ordered_json::array();
  for (const auto& v : r.column_vectors) vecs.push_back(vector_string(v));
  j["column_vectors"] = std::move(vecs);
  j["guaranteed_d"] = r.guaranteed_d;
  j["a_d_after"] = r.a_d_after;
  j["min_slack"] = r.min_slack;
  j["slack_predicted_a_d"] = r.slack_predicted_a_d;
  j["slack_count_agrees"] = r.slack_count_agrees;
  j["solver"] = ordered_json{{"strategy", r.strategy},
                             {"status", r.solver_status},
                             {"t", r.t},
                             {"h", r.h},
                             {"selectable", r.selectable},
                             {"solutions_considered", r.solutions_considered},
                             {"nodes_explored", r.nodes_explored}};
  return j;
}

}  // namespace

std::string render_chain_json(const ChainReport& report) {
  ordered_json j;
  j["start"] = params_json(report.start);
  j["end"] = params_json(report.end);
  const auto& p = report.policy;
  j["policy"] = ordered_json{
      {"max_l", p.max_l},
      {"max_total", p.max_total},
      {"target_d", p.target_d ? ordered_json(*p.target_d) : ordered_json(nullptr)},
      {"max_s", p.max_s ? ordered_json(*p.max_s) : ordered_json(nullptr)},
      {"projective", p.projective},
      {"strategy", std::string(to_string(p.solver.strategy))},
      {"max_solutions", p.solver.max_solutions},
      {"node_limit", p.solver.node_limit}};
  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) steps.push_back(step_json(s));
  j["steps"] = std::move(steps);
  ordered_json pattern = ordered_json::array();
  for (const auto& s : report.steps) {
    pattern.push_back("(" + std::to_string(s.l) + "," + std::to_string(s.s) + ")");
  }
  j["pattern"] = std::move(pattern);
  ordered_json attempts = ordered_json::array();
  for (const auto& a : report.final_attempts) {
    attempts.push_back(ordered_json{{"l", a.l},
                                    {"s", a.s},
                                    {"outcome", std::string(to_string(a.outcome))},
                                    {"nodes_explored", a.nodes_explored}});
  }
  j["final_attempts"] = std::move(attempts);
  j["stop_reason"] = report.stop_reason;
  return j.dump(2) + "\n";
}

std::string render_step_text(const StepRecord& r) {
  std::ostringstream out;
  out << r.before.to_string() << " (" << r.l << "," << r.s << ")-extension: "
      << to_string(r.outcome) << '\n';
  out << "  intersection matrix " << r.t << " x " << r.h << ", selectable columns "
      << r.selectable << '\n';
  out << "  solver " << r.strategy << ": " << r.solver_status << ", " << r.nodes_explored
      << " nodes, " << r.solutions_considered << " solutions considered\n";
  if (r.after) {
    out << "  columns";
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      out << ' ' << r.columns[i] << '=' << vector_string(r.column_vectors[i]);
    }
    out << '\n';
    out << "  result " << r.after->to_string() << ", A_" << r.after->d << " = " << r.a_d_after
        << ", guaranteed d >= " << r.guaranteed_d << ", min slack " << r.min_slack << '\n';
    out << "  slack-predicted count " << r.slack_predicted_a_d
        << (r.slack_count_agrees ? " (agrees)" : " (differs from enumeration)") << '\n';
  }
  return out.str();
}

std::string render_chain_text(const ChainReport& report) {
  std::ostringstream out;
  out << "start " << report.start.to_string() << '\n';
  for (const auto& s : report.steps) {
    out << s.before.to_string() << " --(" << s.l << "," << s.s << ")--> "
        << (s.after ? s.after->to_string() : std::string("?")) << " columns {";
    for (std::size_t i = 0; i < s.columns.size(); ++i) out << (i ? " " : "") << s.columns[i];
    out << "}\n";
  }
  out << "end " << report.end.to_string() << " (" << report.stop_reason << ")\n";
  return out.str();
}

std::string render_analysis(const LinearCode& code) {
  std::ostringstream out;
  const auto& dist = code.weight_distribution();
  const auto d = code.min_distance();
  out << "code " << code.parameters() << (code.degenerate() ? " (degenerate)" : "") << '\n';
  out << "weight distribution:";
  for (const auto& [w, c] : dist.counts) out << ' ' << w << ':' << c;
  out << '\n';
  out << "A_" << d << " = " << dist.count(d) << '\n';
  out << "t = " << code.min_weight_generator().t() << '\n';
  if (auto gap = code.gap()) {
    out << "weight gap = " << *gap << '\n';
  } else {
    out << "weight gap = undefined (single nonzero weight)\n";
  }
  return out.str();
}

}  // namespace lsext
