#include "fatpoint3/report.hpp"

#include <sstream>
#include <stdexcept>

#include "fatpoint3/literal.hpp"

namespace fatpoint3 {

namespace {

const char* arrow(StepKind kind) {
  switch (kind) {
    case StepKind::cremona:
      return " ->(i) ";
    case StepKind::remove_component:
      return " ->(ii) ";
    case StepKind::remove_quadric:
      return " ->(iii) ";
  }
  return " -> ";
}

}  // namespace

std::vector<std::string> render_trace(const ReductionTrace& trace) {
  std::vector<std::string> out;
  const auto& steps = trace.steps;
  std::size_t i = 0;
  while (i < steps.size()) {
    std::size_t last = i;
    if (steps[i].kind == StepKind::remove_component) {
      while (last + 1 < steps.size() && steps[last + 1].kind == StepKind::remove_component) {
        ++last;
      }
    }
    out.push_back(format_system(steps[i].before) + arrow(steps[i].kind) +
                  format_system(steps[last].after));
    i = last + 1;
  }
  return out;
}

nlohmann::json system_to_json(const LinearSystem& system) {
  return {{"degree", system.degree}, {"mults", system.mults}};
}

LinearSystem system_from_json(const nlohmann::json& j) {
  return LinearSystem{j.at("degree").get<int>(), j.at("mults").get<std::vector<int>>()};
}

nlohmann::json trace_to_json(const ReductionTrace& trace) {
  auto out = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    std::vector<int> indices;
    for (int i : step.indices) indices.push_back(i + 1);
    nlohmann::json entry{{"kind", to_string(step.kind)},
                         {"indices", indices},
                         {"before", system_to_json(step.before)},
                         {"after", system_to_json(step.after)}};
    if (step.kind == StepKind::remove_component) {
      entry["alpha"] = step.alpha;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

LinearSystem replay_trace(const nlohmann::json& steps) {
  if (steps.empty()) {
    throw std::invalid_argument("cannot replay an empty trace");
  }
  LinearSystem current = system_from_json(steps.front().at("before"));
  for (const auto& step : steps) {
    if (system_from_json(step.at("before")) != current) {
      throw std::invalid_argument("trace steps do not chain");
    }
    const auto kind = step.at("kind").get<std::string>();
    auto idx = step.at("indices").get<std::vector<int>>();
    for (int& i : idx) --i;
    if (kind == "cremona") {
      if (idx.size() != 4) throw std::invalid_argument("cremona step needs four indices");
      current = normalize(cremona_system(current, {idx[0], idx[1], idx[2], idx[3]}));
    } else if (kind == "remove_component") {
      if (idx.size() != 1 || idx[0] < 0 || idx[0] >= current.points() ||
          current.mults[idx[0]] != -step.at("alpha").get<int>()) {
        throw std::invalid_argument("remove_component step does not match its system");
      }
      current.mults[idx[0]] = 0;
      current = normalize(current);
    } else if (kind == "remove_quadric") {
      if (idx.size() != 9) throw std::invalid_argument("remove_quadric step needs nine indices");
      current.degree -= 2;
      for (int i : idx) current.mults.at(i) -= 1;
      current = normalize(current);
    } else {
      throw std::invalid_argument("unknown step kind '" + kind + "'");
    }
    if (system_from_json(step.at("after")) != current) {
      throw std::invalid_argument("replayed step disagrees with its recorded result");
    }
  }
  return current;
}

std::string grid_tsv(const std::vector<GridRow>& rows) {
  std::ostringstream out;
  out << "d\tm\tr\tconjectured\toracle\tmatch\n";
  for (const auto& row : rows) {
    out << row.degree << '\t' << row.mult << '\t' << row.points << '\t' << row.conjectured << '\t'
        << row.oracle << '\t' << (row.match() ? "yes" : "no") << '\n';
  }
  return out.str();
}

nlohmann::json grid_summary(const GridBounds& bounds, const OracleConfig& config,
                            const std::vector<GridRow>& rows) {
  auto mismatches = nlohmann::json::array();
  std::size_t warnings = 0;
  for (const auto& row : rows) {
    if (row.seeds_disagree) ++warnings;
    if (!row.match()) {
      mismatches.push_back({{"d", row.degree},
                            {"m", row.mult},
                            {"r", row.points},
                            {"conjectured", row.conjectured},
                            {"oracle", row.oracle}});
    }
  }
  return {{"grid",
           {{"d_min", bounds.d_min},
            {"d_max", bounds.d_max},
            {"m_min", bounds.m_min},
            {"m_max", bounds.m_max},
            {"r_min", bounds.r_min},
            {"r_max", bounds.r_max}}},
          {"prime", config.prime},
          {"seeds", config.seeds},
          {"point_mode", to_string(config.point_mode)},
          {"cells", rows.size()},
          {"seed_warnings", warnings},
          {"mismatches", mismatches}};
}

VerdictRow verdict_row(int degree, int mult, int points) {
  const LinearSystem system{degree, std::vector<int>(static_cast<std::size_t>(points), mult)};
  return {degree, mult, points, classify_homogeneous(degree, mult, points),
          conjectured_dimension(system).dimension, expected_dimension(system)};
}

std::string verdict_tsv(const VerdictRow& row) {
  std::ostringstream out;
  out << row.degree << '\t' << row.mult << '\t' << row.points << '\t' << to_string(row.verdict)
      << '\t' << row.conjectured << '\t' << row.expected;
  return out.str();
}

}  // namespace fatpoint3
