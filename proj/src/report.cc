#include "scra/report.h"

#include <cstdio>
#include <vector>

#include "json.hpp"

namespace scra {

namespace {

using Json = nlohmann::ordered_json;

std::size_t DisplayWidth(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;  // Count code points.
  return n;
}

/// Left-aligned columns separated by two spaces.
std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], DisplayWidth(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line.append(width[i] - DisplayWidth(row[i]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string Csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];  // Fields are ids and numbers; never contain commas.
    }
    out += "\n";
  }
  return out;
}

Json Rounded(double value) { return std::stod(FormatNumber(value)); }

template <class T, class F>
Json Optional(const std::optional<T>& v, F convert) {
  return v ? convert(*v) : Json(nullptr);
}

std::string OptionalText(const std::optional<double>& v, std::string_view none) {
  return v ? FormatNumber(*v) : std::string(none);
}

struct Metric {
  std::string label;  // Table label
  std::string key;    // CSV / JSON name
};

const Metric kCount{"|W|", "cutset_count"};
const Metric kAverage{"avg(|w|)", "avg_cutset_size"};
const Metric kJaccard{"J(W,W')", "jaccard"};
const Metric kRisk{"Risk", "risk"};
const Metric kDelta{"ΔRisk", "delta_risk"};

/// Metric rows present in the report, in table order.
std::vector<Metric> MetricsOf(const RiskReport& r) {
  std::vector<Metric> m{kCount, kAverage};
  if (r.jaccard_vs_baseline) m.push_back(kJaccard);
  m.push_back(kRisk);
  if (r.delta_risk) m.push_back(kDelta);
  return m;
}

std::string Text(const RiskReport& r, const Metric& m, std::string_view none) {
  if (m.key == kCount.key) return std::to_string(r.cutset_count);
  if (m.key == kAverage.key) return OptionalText(r.avg_cutset_size, none);
  if (m.key == kJaccard.key) return OptionalText(r.jaccard_vs_baseline, none);
  if (m.key == kRisk.key) return FormatNumber(r.risk);
  return OptionalText(r.delta_risk, none);
}

Json Value(const RiskReport& r, const Metric& m) {
  if (m.key == kCount.key) return r.cutset_count;
  if (m.key == kAverage.key) return Optional(r.avg_cutset_size, Rounded);
  if (m.key == kJaccard.key) return Optional(r.jaccard_vs_baseline, Rounded);
  if (m.key == kRisk.key) return Rounded(r.risk);
  return Optional(r.delta_risk, Rounded);
}

Json MetricArray(const RiskReport& r) {
  Json rows = Json::array();
  for (const Metric& m : MetricsOf(r))
    rows.push_back({{"metric", m.key}, {"value", Value(r, m)}});
  return rows;
}

std::string SubjectText(const SweepRow& row) {
  if (auto* id = std::get_if<NodeId>(&row.subject)) return id->str();
  return FormatNumber(std::get<double>(row.subject));
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string FormatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string WriteReport(const RiskReport& report, ReportFormat format) {
  std::vector<Metric> metrics = MetricsOf(report);
  switch (format) {
    case ReportFormat::kTable: {
      std::vector<std::vector<std::string>> rows{{"metric", "value"}};
      for (const Metric& m : metrics) rows.push_back({m.label, Text(report, m, "-")});
      return Table(rows);
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows{{"metric", "value"}};
      for (const Metric& m : metrics) rows.push_back({m.key, Text(report, m, "")});
      return Csv(rows);
    }
    case ReportFormat::kJson:
      return MetricArray(report).dump(2) + "\n";
  }
  return {};
}

std::string WriteReport(const ComparisonReport& report, ReportFormat format) {
  const std::vector<Metric> metrics{kCount, kAverage, kJaccard, kRisk, kDelta};
  switch (format) {
    case ReportFormat::kTable: {
      std::vector<std::vector<std::string>> rows{{"metric", "baseline", "variant"}};
      for (const Metric& m : metrics)
        rows.push_back({m.label, Text(report.baseline, m, "-"),
                        Text(report.variant, m, "-")});
      return Table(rows);
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows{{"metric", "baseline", "variant"}};
      for (const Metric& m : metrics)
        rows.push_back({m.key, Text(report.baseline, m, ""),
                        Text(report.variant, m, "")});
      return Csv(rows);
    }
    case ReportFormat::kJson: {
      Json doc = {{"baseline", MetricArray(report.baseline)},
                  {"variant", MetricArray(report.variant)}};
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string WriteReport(std::span<const SweepRow> rows, ReportFormat format) {
  auto status = [](const SweepRow& r) { return r.skipped ? "skipped" : "ok"; };
  switch (format) {
    case ReportFormat::kTable:
    case ReportFormat::kCsv: {
      bool table = format == ReportFormat::kTable;
      std::string none = table ? "-" : "";
      std::vector<std::vector<std::string>> out;
      if (table)
        out.push_back({"subject", "ΔRisk", "|W|", "J(W,W')", "Risk", "status"});
      else
        out.push_back(
            {"subject", "delta_risk", "cutset_count", "jaccard", "risk", "status"});
      for (const SweepRow& r : rows) {
        out.push_back({SubjectText(r), OptionalText(r.delta_risk, none),
                       r.cutset_count ? std::to_string(*r.cutset_count) : none,
                       OptionalText(r.jaccard, none), OptionalText(r.risk, none),
                       status(r)});
      }
      return table ? Table(out) : Csv(out);
    }
    case ReportFormat::kJson: {
      Json doc = Json::array();
      for (const SweepRow& r : rows) {
        Json subject = std::holds_alternative<NodeId>(r.subject)
                           ? Json(std::get<NodeId>(r.subject).str())
                           : Rounded(std::get<double>(r.subject));
        doc.push_back({{"subject", subject},
                       {"delta_risk", Optional(r.delta_risk, Rounded)},
                       {"cutset_count", Optional(r.cutset_count,
                                                 [](std::size_t n) { return Json(n); })},
                       {"jaccard", Optional(r.jaccard, Rounded)},
                       {"risk", Optional(r.risk, Rounded)},
                       {"status", status(r)}});
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string WriteCutsets(const CutsetCollection& cutsets, ReportFormat format,
                         std::optional<std::size_t> max_order) {
  std::vector<const Cutset*> shown;
  for (const Cutset& c : cutsets) {
    if (!max_order || c.size() <= *max_order) shown.push_back(&c);
  }
  switch (format) {
    case ReportFormat::kTable: {
      std::vector<std::vector<std::string>> rows{{"order", "cutset"}};
      for (const Cutset* c : shown)
        rows.push_back({std::to_string(c->size()), c->ToString()});
      return Table(rows);
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows{{"order", "cutset"}};
      for (const Cutset* c : shown) {
        std::string events;
        for (const NodeId& id : c->events()) {
          if (!events.empty()) events += ' ';
          events += id.str();
        }
        rows.push_back({std::to_string(c->size()), events});
      }
      return Csv(rows);
    }
    case ReportFormat::kJson: {
      Json doc = Json::array();
      for (const Cutset* c : shown) {
        Json events = Json::array();
        for (const NodeId& id : c->events()) events.push_back(id.str());
        doc.push_back(events);
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace scra
