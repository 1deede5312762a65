#ifndef COVOL_SURVEY_HPP
#define COVOL_SURVEY_HPP

#include "covol/bounds.hpp"
#include "covol/covolume.hpp"
#include "covol/dataset.hpp"

#include <map>
#include <string>
#include <vector>

namespace covol {

enum class Measure { Chi, EulerPoincare };

struct DegreeWindow {
    int m;
    Int sharp_cutoff;  // least d with alpha(m, d, m) > effective chi-budget
    Int adopted;       // published window when it dominates, else the sharp one
    std::string note;
};

struct StagePlan {
    Rat budget;
    Measure measure;
    int psi_degree_cap = 0;
    std::map<int, int> psi_q_caps; // per degree: largest power-of-2 q not excluded
    int xi_degree_cap = 0;
    int rho_degree_cap = 0;
    std::map<int, int> ep_n_caps; // EP only: per n, largest admissible m
    std::vector<DegreeWindow> windows;
    std::vector<std::string> notes;
};

StagePlan prune_cascade(const Rat& budget, Measure measure);

struct RamConfig {
    int n = 0;
    int inf_ramified = 0;
    std::vector<FinitePlaceRef> fin;
    bool uniform = false;
    Rat chi;
    Rat mu_ep;
    bool kb_exact = true;
};

struct RamificationAnalysis {
    uint64_t place_search_bound = 0;
    std::string pool_note;
    std::vector<RamConfig> minima_per_n;  // chi-minimal admissible datum per n
    std::vector<RamConfig> within_budget; // complete list with measure <= budget
};

RamificationAnalysis enumerate_ramification(FieldRecord& rec, const Rat& budget, Measure measure,
                                            const ZetaOptions& zopts = {});

struct LatticeHit {
    int degree = 0;
    Int disc;
    int n = 0;
    bool uniform = false;
    int inf_ramified = 0;
    std::vector<FinitePlaceRef> fin;
    Rat chi, mu_ep;
    std::string label;
};

struct ExclusionNote {
    int degree;
    Int disc;
    std::string stage;
    std::string detail;
};

struct SurveyReport {
    Rat budget;
    Measure measure;
    StagePlan plan;
    std::vector<LatticeHit> survivors;
    std::vector<LatticeHit> minima;
    std::vector<LatticeHit> minima_uniform;
    std::vector<LatticeHit> minima_nonuniform;
    std::vector<ExclusionNote> excluded;
    std::vector<std::string> notes;
    std::string dataset_source;
};

SurveyReport classify(std::vector<FieldRecord>& records, const DatasetMeta& meta, const Rat& budget,
                      Measure measure, const ZetaOptions& zopts = {}, int jobs = 1,
                      bool recheck_excluded = true);

enum class RowStatus { Match, SuspectedTypo, Differs };

struct TableCell {
    std::string computed;
    std::string printed;
    RowStatus status = RowStatus::Match;
};

struct TableRow {
    Int disc;
    std::string poly;
    TableCell zeta, t, kb, g;
};

struct Tables {
    std::vector<TableRow> quintics, quartics, cubics;
    int mismatches = 0; // cells with status Differs
    int typos = 0;      // cells with status SuspectedTypo
};

Tables emit_tables(std::vector<FieldRecord>& records, const std::string& reference_path,
                   const ZetaOptions& zopts = {});

std::string tables_markdown(const Tables& tables);

// every known divergence between computed values and the printed source data,
// each entry carrying both values
std::vector<std::string> discrepancy_report(std::vector<FieldRecord>& records,
                                            const std::string& reference_path,
                                            const ZetaOptions& zopts = {});

std::string measure_name(Measure m);

} // namespace covol

#endif
