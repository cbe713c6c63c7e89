/// @file report.h
/// Rendering of analysis results as aligned tables, CSV, or JSON.
///
/// All real numbers are printed with six decimals.

#ifndef SCRA_REPORT_H_
#define SCRA_REPORT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "scra/analysis.h"
#include "scra/cutsets.h"
#include "scra/perturb.h"

namespace scra {

enum class ReportFormat { kTable, kCsv, kJson };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

/// "%.6f", with negative zero printed as zero.
std::string FormatNumber(double value);

/// CSV columns: metric,value
std::string WriteReport(const RiskReport& report, ReportFormat format);

/// CSV columns: metric,baseline,variant
std::string WriteReport(const ComparisonReport& report, ReportFormat format);

/// CSV columns: subject,delta_risk,cutset_count,jaccard,risk,status
std::string WriteReport(std::span<const SweepRow> rows, ReportFormat format);

/// One cutset per row in canonical order; cutsets larger than `max_order`
/// are left out of the listing.
std::string WriteCutsets(const CutsetCollection& cutsets, ReportFormat format,
                         std::optional<std::size_t> max_order = std::nullopt);

}  // namespace scra

#endif  // SCRA_REPORT_H_
