#pragma once

//==============================================================================
// CSV emission for error curves, sweeps, and runtime tables. File names
// mirror the original plot-source convention, e.g.
//   errorarray_FD_EE_mean_system=6_D=0.00000.txt
// with a header row, t (or M, or N) in the first column, one column per
// curve, 17 significant digits, atomic writes, and a JSON sidecar carrying
// the full run configuration plus a git-style content hash of the emitted
// bytes.
//==============================================================================

#include "pcetd/analysis.hpp"
#include "pcetd/det_solvers.hpp"
#include "pcetd/models.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcetd {

/// System id used in file names: linear 6, quadratic 7, cubic 8, Gray-Scott 0.
int system_id(ModelKind kind);

/// "FD_EE", "FD_ETDRDP" or "Spectral".
std::string discretization_tag(SchemeKind scheme);

std::string error_array_filename(bool intrusive, SchemeKind scheme,
                                 StatKind stat, ModelKind model, double D,
                                 int dim = 1);
std::string performance_filename(ModelKind model, double D);
std::string runtime_filename(SchemeKind scheme);

/// Hex SHA-1 of the git blob encoding of `bytes` ("blob <size>\0" + bytes).
std::string git_blob_sha1(const std::string& bytes);

/// Writes header + rows; all series must share the same abscissa vector.
/// Returns the final path. A sidecar `<path>.meta.json` records `config`
/// entries, per-series metadata, and the content hash. Writing is atomic
/// (temp file + rename).
std::string emit_csv(const std::vector<ErrorSeries>& series,
                     const std::string& directory, const std::string& filename,
                     const std::map<std::string, std::string>& config = {});

/// Parse back a CSV written by emit_csv (round-trip checks and plotting).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
CsvTable parse_csv(const std::string& path);

/// Plain matrix emission (field snapshots); same atomicity + sidecar rules.
std::string emit_matrix_csv(const std::vector<double>& field, int rows,
                            int cols, const std::string& directory,
                            const std::string& filename,
                            const std::map<std::string, std::string>& config);

} // namespace pcetd
