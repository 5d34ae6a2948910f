#ifndef ALCL_PIPELINE_H_
#define ALCL_PIPELINE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcl/al_dynamics.h"
#include "alcl/config.h"
#include "alcl/conserved.h"
#include "alcl/diagnostics.h"
#include "alcl/nls_reference.h"

namespace alcl {

// A module error annotated with the pipeline stage that raised it.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct Verdict {
  std::string name;
  std::string tolerance_name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool evaluated = true;
  bool pass = false;
  std::string note;
};

// Limit-system solutions on the shared fine grid, snapshots at j T / K for
// j = -K..K in increasing time.
struct Reference {
  int points = 0;
  double dx = 0.0;
  std::vector<NlsState> psi;
  std::vector<NlsState> phi;
  double dt = 0.0;
  double duhamel_psi = 0.0;
  double duhamel_phi = 0.0;
};

struct RunBlock {
  double h = 0.0;
  std::string status = "ok";
  std::string error;
  int sites = 0;
  double cutoff = 0.0;  // N
  double dt_lat = 0.0;
  long steps = 0;
  int dt_halvings = 0;
  double kappa0 = 0.0;
  double norm0 = 0.0;  // |alpha(0)|_{l^2}
  std::vector<DriftReport> drifts;
  double boundary_mass = 0.0;
  std::vector<NormProfile> profiles;
  double strichartz_l6 = 0.0;
  double strichartz_l4inf = 0.0;
  double cross_psi = 0.0;
  double cross_phi = 0.0;
  double sign_flip = 0.0;
  ConvergenceErrors errors;
  double psi_channel_max = 0.0;
  double phi_channel_max = 0.0;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;  // reported on stderr only

  const NormProfile* profile(const std::string& label, double parameter) const;
};

struct RunRecord {
  SimConfig config;
  Reference reference;
  std::vector<RunBlock> blocks;  // decreasing h
  std::vector<Verdict> verdicts; // cross-h
  bool partial = false;

  bool AllPass() const;
};

// Snapshots within this fraction of the window edge count as boundary mass.
inline constexpr double kBoundaryFraction = 0.1;
// At most this many snapshots enter the G drift measurement.
inline constexpr int kMaxGSnapshots = 9;

// Reference grid spacing min(h_list)/4 over the configured window.
Reference ComputeReference(const SimConfig& cfg);

// Full pipeline for one mesh: sample, evolve, split, compare, diagnose.
RunBlock RunSingle(const SimConfig& cfg, double h, const Reference& ref);

// Runs every h (optionally only `only_h`) on up to `jobs` workers and merges
// blocks in decreasing-h order. Failed meshes are recorded, not fatal.
RunRecord RunSweep(const SimConfig& cfg, int jobs = 1, std::optional<double> only_h = {});

// Cross-h verdicts over successful blocks.
std::vector<Verdict> SweepVerdicts(const SimConfig& cfg, const Reference& ref,
                                   const std::vector<RunBlock>& blocks);

// sup_t of the equicontinuity profile at frequency kappa for the limit
// solution, the level the lattice profiles approach as h -> 0.
double ReferenceProfileSup(const Reference& ref, const std::string& label, double parameter);

// Minimax fit of y_j ~ C x_j: returns {C, max_j |y_j / (C x_j) - 1|}.
std::pair<double, double> FitScale(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace alcl

#endif  // ALCL_PIPELINE_H_
