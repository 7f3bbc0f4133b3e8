#pragma once

#include "fluidsurf/scenarios.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fluidsurf {

// ---------------------------------------------------------------------------
// Meshes

/// Reads an ASCII OFF or OBJ triangle mesh (format from the extension unless
/// given as "off" / "obj"). Orientation is repaired when possible; the result
/// is a validated closed oriented manifold. Throws IoError on parse errors
/// and MeshError on topology problems.
ReferenceMesh read_mesh(const std::filesystem::path& path, std::string format = "");
ReferenceMesh parse_off(const std::string& text);
ReferenceMesh parse_obj(const std::string& text);

// ---------------------------------------------------------------------------
// Fields and diagnostics

/// Legacy VTK (ASCII) with every curved element split into k^2 flat
/// triangles through its Lagrange nodes. Point data u, p, H, |Pu|.
std::string snapshot_vtk(const TaylorHoodSpace& space, const State& state, const CurvedGeometry& geometry);
void write_snapshot(const TaylorHoodSpace& space, const State& state, const CurvedGeometry& geometry,
                    const std::filesystem::path& path);

inline constexpr const char* kDiagnosticsHeader = "t,e,dA,dV,Ekin,EH,dS,qS,lambda,newton_iters,phi";
std::string diagnostics_row(const DiagnosticsRecord& r);
void write_diagnostics(const std::vector<DiagnosticsRecord>& records, const std::filesystem::path& path);
std::vector<DiagnosticsRecord> read_diagnostics(const std::filesystem::path& path);
std::vector<DiagnosticsRecord> parse_diagnostics(const std::string& text);

/// Appends rows as they arrive and flushes each one, so partial runs leave
/// a readable file.
class DiagnosticsWriter {
public:
  explicit DiagnosticsWriter(const std::filesystem::path& path, bool append = false);
  void write(const DiagnosticsRecord& r);

private:
  std::filesystem::path path_;
};

// ---------------------------------------------------------------------------
// Configuration

struct RunConfig {
  SimulationConfig simulation;
  ScenarioConfig scenario;
  std::string output_dir = "output";
  int histogram_bins = 20;
};

/// Flat key = value text with [physics], [discretization], [solver] and
/// [output] sections; '#' starts a comment. Unknown keys are errors.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});
/// Canonical text; parse_config(print_config(c)) reproduces c exactly.
std::string print_config(const RunConfig& config);
/// FNV-1a (64 bit) of the canonical text without the [output] section.
std::uint64_t config_hash(const RunConfig& config);
std::string hash_hex(std::uint64_t h);

// ---------------------------------------------------------------------------
// Checkpoints

struct Checkpoint {
  State state;
  std::shared_ptr<const ReferenceMesh> mesh;
  CurvedGeometry geometry;
  ReferenceValues reference;
  std::uint64_t config_hash = 0;
};

/// Text dump with every double in hexadecimal floating point, so a restart
/// reproduces the run bitwise.
void write_checkpoint(const std::filesystem::path& path, const State& state, const CurvedGeometry& geometry,
                      const ReferenceValues& reference, std::uint64_t config_hash);
Checkpoint read_checkpoint(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Run manifest

struct ManifestEntry {
  std::string file;
  std::string kind; ///< snapshot | checkpoint | diagnostics | config
  long step = 0;
  double t = 0.0;
};

struct RunManifest {
  std::string config_text;
  std::uint64_t config_hash = 0;
  std::string mesh_provenance;
  std::string version;
  std::vector<ManifestEntry> files;
  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

std::string version_string();

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace fluidsurf
