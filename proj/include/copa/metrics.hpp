#ifndef COPA_METRICS_HPP
#define COPA_METRICS_HPP

#include "copa/farfield.hpp"

#include <optional>
#include <vector>

namespace copa {

struct Lobe {
  Index iu = 0;
  Index iv = 0;
  double u = 0.0;
  double v = 0.0;
  double db = 0.0;
};

/// All local maxima of the visible region above `floor`, sorted descending
/// by power, ties broken by (u, then v) ascending. Equal-valued plateaus
/// (exact floating-point ties, e.g. a symmetric lobe straddling two
/// samples) count as one lobe, reported at their lowest-(u,v) point.
std::vector<Lobe> find_lobes(const PowerPattern& pattern, double floor_db);

/// Optional rectangular search window in direction cosines (used for
/// ambiguity-cell side-lobe searches); +-inf bounds mean unrestricted.
struct SearchWindow {
  double u_min = -2.0, u_max = 2.0;
  double v_min = -2.0, v_max = 2.0;
};

std::vector<Lobe> find_lobes(const PowerPattern& pattern, double floor_db,
                             const SearchWindow& window);

/// Full width between the half-power crossings nearest the peak along one
/// axis, linear interpolation in dB, returned in degrees.
/// Throws "unresolved lobe" when the lobe is cut by the grid or mask edge.
double beamwidth_3db(const PowerPattern& pattern, double peak_u, double peak_v, Axis axis);

/// Same width measured in direction-cosine units (mask construction).
double beamwidth_3db_dircos(const PowerPattern& pattern, double peak_u, double peak_v, Axis axis);

struct SllOptions {
  /// Lobes whose center lies inside an exclusion rectangle are treated as
  /// main-lobe replicas, not side lobes (grating-lobe-aware censuses).
  std::vector<std::pair<double, double>> extra_exclusions;
  SearchWindow window;
  double floor_db = -120.0;
};

/// (highest lobe excluding the main lobe) - (main lobe), dB. The main-lobe
/// exclusion zone spans 2x the 3 dB width per axis, centered on the peak.
/// Empty when no secondary lobe rises above the numeric floor.
std::optional<double> side_lobe_level(const PowerPattern& pattern, double peak_u, double peak_v);
std::optional<double> side_lobe_level(const PowerPattern& pattern, double peak_u, double peak_v,
                                      const SllOptions& options);

struct BeamMetrics {
  double peak_theta_x_deg = 0.0;
  double peak_theta_y_deg = 0.0;
  double peak_u = 0.0;
  double peak_v = 0.0;
  double beamwidth_x_deg = 0.0;
  double beamwidth_y_deg = 0.0;
  std::optional<double> sll_db;
  std::vector<Lobe> lobes;  // secondary maxima above the census floor
};

/// Peak location (global max over visible points), 3 dB widths, SLL and
/// the lobe census above `lobe_floor_db`.
BeamMetrics beam_metrics(const PowerPattern& pattern, double lobe_floor_db = -40.0);

/// floor(fov_x / bw) * floor(fov_y / bw); 0 when the beam exceeds the FOV.
std::int64_t resolvable_spots(double fov_x_deg, double fov_y_deg, double beamwidth_deg);

struct KSweepRow {
  Rational k;
  std::optional<double> sll_coprime_db;
  std::optional<double> sll_tx_db;
  std::optional<double> sll_halfwave_db;
};

/// SLL-vs-k study: for each k builds the co-prime pair with k1 = k2 = k,
/// the uniform transmitter alone, and the (P*Q*k)-per-axis half-wavelength
/// transceiver reference, all steered to `steer`, array factors only.
/// The uniform-transmitter census excludes its grating-lobe replicas
/// (main-lobe copies); both transceivers have none to exclude.
std::vector<KSweepRow> sll_vs_k(const CoprimeSpec& spec, const std::vector<Rational>& k_values,
                                double steer_u, double steer_v, Index grid_n);

}  // namespace copa

#endif
