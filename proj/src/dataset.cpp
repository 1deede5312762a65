#include "covol/dataset.hpp"

#include "covol/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace covol {

namespace {

using json = nlohmann::ordered_json;

IntPoly poly_from_json(const json& arr) {
    IntPoly p;
    for (const auto& c : arr) {
        if (c.is_number_integer()) p.push_back(Int((long)c.get<int64_t>()));
        else p.push_back(Int(c.get<std::string>()));
    }
    return poly_trim(std::move(p));
}

} // namespace

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::UsageError, "cannot open dataset " + path);
    Dataset ds;
    std::string line;
    bool meta_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) fail(Errc::UsageError, "bad JSON line in " + path);
        if (j.contains("dataset_meta")) {
            const auto& m = j["dataset_meta"];
            ds.meta.source = m.value("source", "");
            if (m.contains("complete")) {
                for (auto& [deg, bound] : m["complete"].items())
                    ds.meta.complete_below[std::stoi(deg)] = Int((long)bound.get<int64_t>());
            }
            meta_seen = true;
            continue;
        }
        FieldRecordInput rec;
        rec.degree = j.at("degree").get<int>();
        rec.disc = Int((long)j.at("disc").get<int64_t>());
        rec.poly = poly_from_json(j.at("poly"));
        for (const auto& u : j.value("fund_units", json::array())) rec.fund_units.push_back(poly_from_json(u));
        rec.class_number = j.value("class_number", 1);
        rec.class_2rank = j.value("class_2rank", 0);
        if (j.contains("overrides")) {
            for (auto& [p, list] : j["overrides"].items()) {
                std::vector<SplittingFactor> factors;
                for (const auto& ef : list) factors.push_back({ef[0].get<int>(), ef[1].get<int>()});
                rec.overrides[std::stoull(p)] = std::move(factors);
            }
        }
        rec.source = j.value("source", "");
        ds.records.push_back(std::move(rec));
    }
    if (!meta_seen) fail(Errc::UsageError, "dataset metadata line missing in " + path);
    std::sort(ds.records.begin(), ds.records.end(), [](const auto& a, const auto& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.disc < b.disc;
    });
    return ds;
}

FieldRecord build_record(const FieldRecordInput& input) {
    NumberField field = NumberField::build(input.poly, input.disc, input.overrides);
    UnitSystem units = UnitSystem::verify(field, input.fund_units);
    FieldRecord rec{input, std::move(field), std::move(units), {}, {}, std::nullopt};
    auto [u_index, u_plus_sq] = unit_index(rec.units);
    ClassNumberResult h = verify_class_number(rec.field, input.class_number);
    auto [kprime, kprime_flag] = degree_kprime(h.h, input.class_2rank);
    rec.ci.h = h.h;
    rec.ci.h_provenance = h.provenance;
    rec.ci.cl_2rank = input.class_2rank;
    rec.ci.u_index = u_index;
    rec.ci.u_plus_sq = u_plus_sq;
    rec.ci.kprime_deg = kprime;
    rec.ci.kprime_upper_bound_only = kprime_flag;
    rec.ci.kB_deg = degree_kB(rec.field.degree(), kprime, u_index);
    rec.ci.t = rec.field.places_over_2();
    rec.notes = h.notes;
    rec.notes.push_back("unit data: sign-rank verified; fundamentality per dataset source");
    return rec;
}

const ZetaResult& ensure_zeta(FieldRecord& record, const ZetaOptions& opts) {
    if (!record.zeta) record.zeta = compute_zeta(record.field, opts);
    return *record.zeta;
}

} // namespace covol
