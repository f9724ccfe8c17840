#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dgl/config.hpp"
#include "dgl/diagnostics.hpp"
#include "dgl/initial_data.hpp"
#include "dgl/integrator.hpp"
#include "dgl/models.hpp"
#include "dgl/weight.hpp"

namespace dgl {

enum class EquationPreset { dcgl, drgl, dnls, general };
enum class BoundKind { none, nongauge_imag, nongauge_real, gauge };

// A fully resolved run description. Sweeps substitute the axis value into the
// raw config and re-resolve, so a sweep cell and a standalone simulate of the
// same config are the same computation.
struct RunSetup {
    EquationPreset preset = EquationPreset::dcgl;
    Nonlinearity nl = Nonlinearity::gauge(3.0);
    DCGLParams dcgl;
    GeneralParams general; // preset == general only
    SignConvention convention = SignConvention::source;
    BoundKind bound = BoundKind::none;

    LatticeGeometry geometry;
    ScalingProfile profile;
    DataKind data_kind = DataKind::imaginary_positive;
    std::uint64_t seed = 1;
    std::optional<double> normalize_m0;
    std::optional<double> normalize_norm2;
    double sigma = 1.0;

    IntegratorConfig integrator;

    std::optional<double> mu; // exponential weight => weighted run
    double epsilon = 1.0;

    static RunSetup from_config(const Config& cfg);

    LatticeState initial_state() const;
    std::optional<LatticeState> forcing_state() const; // from `forcing = box:<amp>:<hw>`
    RhsFn rhs() const;         // blow-up form (source/lhs convention)
    RhsFn rhs_weighted() const; // general form; dcgl presets go through dcgl_to_general
    Weight weight() const;
    GeneralParams general_image() const;

private:
    std::string forcing_spec_ = "none";
    friend struct RunSetupAccess;
};

// One sweep row; column order of the CSV is
// axis,N,L,sigma,T_sim,T_star,valid,threshold,dt,refinements.
struct ResultRow {
    double axis_value = 0.0;
    int half_width = 0;
    int site_count = 0;
    double sigma = 1.0;
    std::optional<double> t_sim;
    std::optional<double> t_star;
    bool valid = false;
    double threshold = 0.0;
    double dt = 0.0;
    long refinements = 0;
};

struct CellResult {
    BlowUpReport report;
    std::optional<double> t_star;
    bool t_star_valid = false;
    double m0_used = 0.0; // M(0), N(0) or mass at t = 0 feeding the bound
};

// Integrates one cell and evaluates its bound; no files written.
CellResult run_cell(const RunSetup& setup, const std::vector<Observer>& extra_observers = {});

struct SimulateOutcome {
    BlowUpReport report;
    std::optional<double> t_star;
    bool t_star_valid = false;
    std::filesystem::path trajectory_csv;
    std::filesystem::path report_json;
};
SimulateOutcome run_simulate(const Config& cfg, const std::filesystem::path& out_dir);

struct SweepOutcome {
    std::vector<ResultRow> rows;
    std::filesystem::path csv;
};
SweepOutcome run_sweep(const Config& cfg, const std::filesystem::path& out_dir, int threads = 1);

struct AttractorOutcome {
    AttractorReport report;
    std::filesystem::path report_json;
    std::filesystem::path decay_csv; // weighted case only
    // finite case: one entry per initial norm
    struct Entry {
        double initial_norm;
        std::optional<double> entry_time;
        bool within_t0;
    };
    std::vector<Entry> entries;
    // weighted case
    double fitted_slope = 0.0;     // d/dt log ||u||^2_theta (f = 0)
    double sup_wnorm_sq = 0.0;     // over t >= entry_time (forced)
    double sup_tail = 0.0;         // over t >= T(eta) (forced)
    double t_eta = 0.0;
    double eta = 0.0;
};
AttractorOutcome run_attractor_experiment(const Config& cfg, const std::filesystem::path& out_dir);

struct TruncationOutcome {
    struct Row {
        int half_width;        // N; compared against 2N
        double sup_difference; // sup_t || u_N - u_2N ||_theta over the run
    };
    std::vector<Row> rows;
    std::filesystem::path csv;
};
TruncationOutcome run_truncation_experiment(const Config& cfg, const std::filesystem::path& out_dir);

struct BoundsOutcome {
    std::filesystem::path json;
};
BoundsOutcome run_bounds(const Config& cfg, const std::filesystem::path& out_dir);

// 17-significant-digit decimal formatting used by every CSV writer.
std::string format_real(double value);

} // namespace dgl
