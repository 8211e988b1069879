#pragma once

/// Check reports and their serialization. JSON is emitted with fixed key
/// order and fixed float formatting (17 significant digits) so identical
/// configurations produce byte-identical files.

#include <optional>
#include <string>
#include <vector>

#include "gaussmap/calculus.hpp"

namespace gaussmap {

struct FieldStat {
    std::string name;
    double max_abs = 0;
    double mean_abs = 0;
    int argmax_i = -1, argmax_j = -1;
    std::optional<double> tol;  // absent -> informational, never gates
    bool pass = true;
};

struct AuditInfo {
    std::optional<double> s_fit;
    std::optional<double> c_t_fit;
    std::optional<int> ar_sign;
};

struct CheckReport {
    std::string check;
    std::string surface;
    std::vector<std::pair<std::string, double>> params;
    int Nu = 0, Nv = 0;
    bool richardson = false;
    std::vector<FieldStat> fields;
    AuditInfo audit;
    std::vector<std::pair<std::string, std::string>> meta;
    bool pass = true;

    void add_meta(const std::string& k, const std::string& v) { meta.emplace_back(k, v); }
    void add_meta(const std::string& k, double v);
    /// Recomputes `pass` from the gated fields.
    void finalize();
    const FieldStat* field(const std::string& name) const;
};

/// A residual grid kept alongside the report for CSV export.
/// NaN entries mark nodes without a full stencil.
struct NamedGrid {
    std::string name;
    ScalarField values;
    std::vector<double> us, vs;  // node coordinates
};

struct CheckOutcome {
    CheckReport report;
    std::vector<NamedGrid> grids;
};

/// Builds a FieldStat from a residual grid (NaN-aware), gating against
/// `tol` when provided.
FieldStat field_from_grid(const std::string& name, const ScalarField& g,
                          std::optional<double> tol);

std::string format_double(double x);
std::string report_to_json(const CheckReport& r);
std::string grid_to_csv(const NamedGrid& g);

/// Writes content to path via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gaussmap
