#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlpbench/clustering/algo_spec.hpp"
#include "dlpbench/core/types.hpp"
#include "dlpbench/dissimilarity/measure_spec.hpp"
#include "dlpbench/representation/rep_spec.hpp"

namespace dlpbench {

/// One similarity paradigm: a raw-series distance measure, or a
/// representation compared with ED (SAX with its own string distance).
struct Paradigm {
    bool is_representation = false;
    MeasureSpec measure;
    RepSpec rep;

    /// Accepts any measure id ("dtw(w=3)") or representation id ("pca(nc=10)").
    static Paradigm parse(std::string_view text);
    static Paradigm of(const MeasureSpec& m);
    static Paradigm of(const RepSpec& r);

    /// Canonical id, e.g. "dtw(w=3)".
    std::string id() const;
    /// Method name without parameters, e.g. "dtw".
    std::string family() const;
    /// Parameter list of the canonical id ("w=3"), empty when there is none.
    std::string params() const;

    bool operator==(const Paradigm&) const = default;
};

/// A named method together with the parameter settings evaluated for it.
/// Families with one member are reported under that member's own id;
/// larger ones under "<name>_exp", the mean over the members.
struct ParadigmFamily {
    std::string name;
    std::vector<Paradigm> members;

    std::string report_id() const;
};

enum class GridMode { Default, Retained, Full };

GridMode parse_grid_mode(std::string_view text);
std::string grid_mode_name(GridMode mode);

/// Every stage-one method name (23 measures with Minkowski at four orders,
/// six vector representations and SAX once per string distance), in a
/// fixed order.
const std::vector<std::string>& stage1_method_names();

/// The 12 paradigms carried into stage two.
const std::vector<std::string>& retained_method_names();

/// Parameter settings for `name` under `mode`. Default gives the table
/// default; Retained gives the stage-two subset (the default for methods
/// without one); Full gives the complete tested grid. A name that already
/// carries parameters ("dtw(w=3)") always yields exactly that paradigm.
ParadigmFamily method_family(std::string_view name, GridMode mode);

/// "<paradigm>+<algorithm>", or the algorithm id alone for k-means and
/// k-shape, which cluster the raw series.
std::string approach_id(std::string_view paradigm_id, const AlgoSpec& algo);

/// Splits an approach id at its '+' into (paradigm, algorithm). The
/// paradigm is "raw" for indivisible approaches.
std::pair<std::string, std::string> split_approach_id(std::string_view id);

}  // namespace dlpbench
