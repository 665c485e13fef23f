#include "toricstab/json_io.hpp"

#include <json.hpp>

#include <utility>

namespace toric {

namespace {

using nlohmann::json;

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

int get_int(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

IndexSet parse_index_set(const json& j)
{
    if (!j.is_array())
        throw ValidationError("index set must be an array of integers");
    std::vector<int> elems;
    for (const json& v : j) {
        if (!v.is_number_integer())
            throw ValidationError("index set entries must be integers");
        elems.push_back(v.get<int>());
    }
    return IndexSet(std::move(elems));
}

json index_set_json(const IndexSet& s)
{
    return json(s.elements());
}

std::string dump(const json& j, bool pretty)
{
    return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace

SubsetCollection parse_collection(const std::string& text)
{
    const json j = parse_text(text);
    if (!j.is_object())
        throw ValidationError("collection document must be an object");
    SubsetCollection I;
    I.n = get_int(j, "n");
    if (!j.contains("I") || !j["I"].is_array())
        throw ValidationError("missing or non-array field 'I'");
    for (const json& m : j["I"])
        I.members.push_back(parse_index_set(m));
    if (j.contains("strict")) {
        if (!j["strict"].is_boolean())
            throw ValidationError("field 'strict' must be a boolean");
        I.strict = j["strict"].get<bool>();
    }
    I.validate();
    return I;
}

std::string dump_collection(const SubsetCollection& I, bool pretty)
{
    json j;
    j["n"] = I.n;
    j["strict"] = I.strict;
    json members = json::array();
    for (const IndexSet& m : I.members)
        members.push_back(index_set_json(m));
    j["I"] = std::move(members);
    return dump(j, pretty);
}

std::string dump_complex(const SimplicialComplex& K, bool pretty)
{
    json j;
    j["n"] = K.n();
    json faces = json::array();
    for (const IndexSet& f : K.faces())
        faces.push_back(index_set_json(f));
    j["faces"] = std::move(faces);
    return dump(j, pretty);
}

std::string dump_fan(const Fan& F, bool pretty)
{
    json j;
    j["n"] = F.n();
    json cones = json::array();
    for (const Cone& c : F.cones())
        cones.push_back(index_set_json(c.generators));
    j["cones"] = std::move(cones);
    return dump(j, pretty);
}

std::string dump_index_sets(const std::string& key, int n,
                            const std::vector<IndexSet>& sets, bool pretty)
{
    json j;
    j["n"] = n;
    json arr = json::array();
    for (const IndexSet& s : sets)
        arr.push_back(index_set_json(s));
    j[key] = std::move(arr);
    return dump(j, pretty);
}

MapTuple parse_tuple(const std::string& text)
{
    const json j = parse_text(text);
    if (!j.is_object())
        throw ValidationError("tuple document must be an object");
    const int d = get_int(j, "d");
    const int n = get_int(j, "n");
    if (d < 0 || n < 1)
        throw ValidationError("tuple needs d >= 0 and n >= 1");
    if (!j.contains("form") || !j["form"].is_string())
        throw ValidationError("missing or non-string field 'form'");
    const std::string form = j["form"].get<std::string>();
    if (!j.contains("components") || !j["components"].is_array())
        throw ValidationError("missing or non-array field 'components'");
    const json& comps = j["components"];
    if (static_cast<int>(comps.size()) != n)
        throw ValidationError("tuple must have exactly n components");

    if (form == "roots") {
        std::vector<RootMultiset> roots;
        for (const json& comp : comps) {
            if (!comp.is_array())
                throw ValidationError("roots component must be an array of [point, mult]");
            std::vector<RootMultiset::Entry> entries;
            for (const json& e : comp) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
                    !e[1].is_number_integer())
                    throw ValidationError("root entry must be [\"point\", multiplicity]");
                entries.push_back(RootMultiset::Entry{
                    parse_gaussian(e[0].get<std::string>()), e[1].get<int>()});
            }
            RootMultiset r(std::move(entries));
            if (r.degree() != d)
                throw ValidationError("root multiplicities must sum to d");
            roots.push_back(std::move(r));
        }
        return MapTuple::from_roots(std::move(roots));
    }
    if (form == "coeffs") {
        std::vector<MonicPolynomial> polys;
        for (const json& comp : comps) {
            if (!comp.is_array() || static_cast<int>(comp.size()) != d)
                throw ValidationError("coeffs component must list exactly d coefficients");
            MonicPolynomial p;
            for (const json& c : comp) {
                if (!c.is_string())
                    throw ValidationError("coefficients must be strings");
                p.coeffs.push_back(parse_gaussian(c.get<std::string>()));
            }
            polys.push_back(std::move(p));
        }
        return MapTuple::from_coeffs(std::move(polys));
    }
    throw ValidationError("form must be \"roots\" or \"coeffs\"");
}

std::string dump_tuple(const MapTuple& F, bool pretty)
{
    json j;
    j["d"] = F.degree();
    j["n"] = F.n();
    json comps = json::array();
    if (F.form() == TupleForm::roots) {
        j["form"] = "roots";
        for (const RootMultiset& r : F.roots()) {
            json comp = json::array();
            for (const RootMultiset::Entry& e : r.entries())
                comp.push_back(json::array({gaussian_string(e.point), e.multiplicity}));
            comps.push_back(std::move(comp));
        }
    } else {
        j["form"] = "coeffs";
        for (const MonicPolynomial& p : F.coeffs()) {
            json comp = json::array();
            for (const GaussianRational& c : p.coeffs)
                comp.push_back(gaussian_string(c));
            comps.push_back(std::move(comp));
        }
    }
    j["components"] = std::move(comps);
    return dump(j, pretty);
}

std::string dump_band_report(const BandScanReport& report, bool pretty, bool full_grid)
{
    json j;
    j["agree"] = report.agree;
    j["closed_form"] = report.closed_form;
    if (report.min_band)
        j["min_contaminated_s_minus_k"] = *report.min_band;
    else
        j["min_contaminated_s_minus_k"] = nullptr;
    json cells = json::array();
    const ScanWindow& w = report.grid.window();
    for (int k = w.k_lo; k <= w.k_hi; ++k) {
        for (int s = 0; s <= w.s_hi; ++s) {
            const CellState st = report.grid.state(k, s);
            const bool unknown = st == CellState::seed || st == CellState::contaminated;
            if (!full_grid && !unknown)
                continue;
            json cell;
            cell["k"] = k;
            cell["s"] = s;
            cell["state"] = unknown ? "unknown" : (st == CellState::zero ? "zero" : "known");
            cells.push_back(std::move(cell));
        }
    }
    j["cells"] = std::move(cells);
    return dump(j, pretty);
}

}  // namespace toric
