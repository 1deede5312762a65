#ifndef COVOL_DATASET_HPP
#define COVOL_DATASET_HPP

#include "covol/arith.hpp"
#include "covol/numfield.hpp"
#include "covol/zeta.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace covol {

struct FieldRecordInput {
    int degree = 0;
    Int disc;
    IntPoly poly;
    std::vector<IntPoly> fund_units;
    int class_number = 1;
    int class_2rank = 0;
    SplitOverrides overrides;
    std::string source;
};

struct DatasetMeta {
    std::string source;
    std::map<int, Int> complete_below; // degree -> exclusive disc bound claimed complete
};

struct Dataset {
    DatasetMeta meta;
    std::vector<FieldRecordInput> records; // sorted by (degree, disc)
};

// JSON-lines: first record {"dataset_meta": ...}, then one field per line
Dataset load_dataset(const std::string& path);

// fully computed per-field data
struct FieldRecord {
    FieldRecordInput input;
    NumberField field;
    UnitSystem units;
    ClassInvariants ci;
    std::vector<std::string> notes;
    std::optional<ZetaResult> zeta; // filled by ensure_zeta
};

FieldRecord build_record(const FieldRecordInput& input);
const ZetaResult& ensure_zeta(FieldRecord& record, const ZetaOptions& opts = {});

} // namespace covol

#endif
