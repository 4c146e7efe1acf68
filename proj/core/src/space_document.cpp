#include "roughspace/space_document.hpp"

#include <json.hpp>

#include <stdexcept>

namespace roughspace::cli {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw std::invalid_argument("space document: unknown key '" + key + "' in " + where);
    }
}

std::vector<std::string> string_array(const json& value, const std::string& where) {
    if (!value.is_array()) throw std::invalid_argument("space document: " + where + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw std::invalid_argument("space document: " + where + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::size_t> label_indices(const order::FinitePoset& poset, const json& value,
                                       const std::string& where) {
    std::vector<std::size_t> out;
    for (const auto& label : string_array(value, where)) out.push_back(poset.require_index(label));
    return out;
}

std::vector<std::size_t> total_map(const order::FinitePoset& poset, const json& value,
                                   const std::string& name) {
    if (!value.is_object())
        throw std::invalid_argument("space document: \"" + name + "\" must be an object");
    std::vector<std::size_t> map(poset.size(), poset.size());
    for (const auto& [key, target] : value.items()) {
        std::size_t from = poset.require_index(key);
        if (!target.is_string())
            throw std::invalid_argument("space document: \"" + name + "\" values must be labels");
        map[from] = poset.require_index(target.get<std::string>());
    }
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (map[i] == poset.size())
            throw std::invalid_argument("space document: \"" + name + "\" map is missing element '" +
                                        poset.label(i) + "'");
    return map;
}

order::BoundedLattice lattice_from_document(order::FinitePoset poset, const json& doc) {
    if (!doc.contains("lattice")) return order::BoundedLattice::derive(std::move(poset));
    const json& lattice = doc.at("lattice");
    if (!lattice.is_object())
        throw std::invalid_argument("space document: \"lattice\" must be an object");
    reject_unknown_keys(lattice, {"derive", "join", "meet"}, "\"lattice\"");
    if (lattice.contains("derive")) {
        if (lattice.size() != 1 || !lattice.at("derive").is_boolean() ||
            !lattice.at("derive").get<bool>())
            throw std::invalid_argument("space document: \"lattice\" derive must be exactly {\"derive\": true}");
        return order::BoundedLattice::derive(std::move(poset));
    }
    if (!lattice.contains("join") || !lattice.contains("meet"))
        throw std::invalid_argument("space document: \"lattice\" needs both join and meet tables");

    const std::size_t n = poset.size();
    auto read_table = [&](const json& triples, const char* name) {
        std::vector<std::uint32_t> table(n * n, static_cast<std::uint32_t>(n));
        if (!triples.is_array())
            throw std::invalid_argument(std::string("space document: ") + name + " must be an array of triples");
        for (const auto& t : triples) {
            if (!t.is_array() || t.size() != 3)
                throw std::invalid_argument(std::string("space document: ") + name + " entries must be [a,b,value]");
            std::size_t a = poset.require_index(t.at(0).get<std::string>());
            std::size_t b = poset.require_index(t.at(1).get<std::string>());
            std::size_t v = poset.require_index(t.at(2).get<std::string>());
            table[a * n + b] = table[b * n + a] = static_cast<std::uint32_t>(v);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (table[i * n + j] == n)
                    throw std::invalid_argument(std::string("space document: ") + name +
                                                " table is missing the pair {" + poset.label(i) +
                                                ", " + poset.label(j) + "}");
        return table;
    };
    auto join = read_table(lattice.at("join"), "join");
    auto meet = read_table(lattice.at("meet"), "meet");
    return order::BoundedLattice::from_tables(std::move(poset), std::move(join), std::move(meet));
}

}  // namespace

ParsedSpace parse_space_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("space document: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("space document: top level must be an object");
    reject_unknown_keys(doc, {"elements", "order", "lattice", "lower", "upper", "granulation", "profile"},
                        "the document");
    for (const char* required : {"elements", "order", "lower", "upper", "granulation"})
        if (!doc.contains(required))
            throw std::invalid_argument("space document: missing key \"" + std::string(required) + "\"");

    auto elements = string_array(doc.at("elements"), "\"elements\"");

    const json& order_obj = doc.at("order");
    if (!order_obj.is_object())
        throw std::invalid_argument("space document: \"order\" must be an object");
    reject_unknown_keys(order_obj, {"mode", "pairs"}, "\"order\"");
    if (!order_obj.contains("mode") || !order_obj.contains("pairs"))
        throw std::invalid_argument("space document: \"order\" needs mode and pairs");
    std::string mode_tag = order_obj.at("mode").get<std::string>();
    order::RelationMode mode;
    if (mode_tag == "covers") {
        mode = order::RelationMode::covers;
    } else if (mode_tag == "full") {
        mode = order::RelationMode::full_order;
    } else {
        throw std::invalid_argument("space document: order mode must be \"covers\" or \"full\"");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& pair : order_obj.at("pairs")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("space document: order pairs must be [a,b]");
        pairs.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    }

    auto poset = order::build_poset(elements, pairs, mode);
    auto lattice = lattice_from_document(std::move(poset), doc);
    const order::FinitePoset& carrier = lattice.poset();

    auto lower = total_map(carrier, doc.at("lower"), "lower");
    auto upper = total_map(carrier, doc.at("upper"), "upper");
    auto granulation = label_indices(carrier, doc.at("granulation"), "\"granulation\"");

    ParsedSpace parsed{
        space::HigherGranularSpace::make(std::move(lattice), std::move(lower), std::move(upper),
                                         std::move(granulation)),
        std::nullopt};
    const order::FinitePoset& p = parsed.space.poset();

    if (doc.contains("profile")) {
        const json& profile_obj = doc.at("profile");
        if (!profile_obj.is_object())
            throw std::invalid_argument("space document: \"profile\" must be an object");
        reject_unknown_keys(profile_obj, {"C", "R", "phi", "flags"}, "\"profile\"");
        space::AssumptionProfile profile;
        if (profile_obj.contains("C")) profile.crisp = label_indices(p, profile_obj.at("C"), "profile C");
        if (profile_obj.contains("R")) profile.rough = label_indices(p, profile_obj.at("R"), "profile R");
        if (profile_obj.contains("phi")) {
            const json& phi = profile_obj.at("phi");
            if (!phi.is_object())
                throw std::invalid_argument("space document: profile phi must be an object");
            for (const auto& [key, value] : phi.items()) {
                if (!value.is_array() || value.size() != 2)
                    throw std::invalid_argument("space document: phi values must be [a,b]");
                profile.phi[p.require_index(key)] = {
                    p.require_index(value.at(0).get<std::string>()),
                    p.require_index(value.at(1).get<std::string>())};
            }
        }
        if (profile_obj.contains("flags")) {
            for (const auto& tag : string_array(profile_obj.at("flags"), "profile flags")) {
                auto flag = space::assumption_from_string(tag);
                if (!flag) throw std::invalid_argument("space document: unknown flag '" + tag + "'");
                profile.flags.insert(*flag);
            }
        }
        profile.n = p.size();
        profile.k = profile.crisp.size();
        parsed.profile = std::move(profile);
    }
    return parsed;
}

std::string make_pawlak_document(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::string>>& blocks,
                                 bool with_profile) {
    auto s = space::from_partition(universe, blocks);
    const order::FinitePoset& p = s.poset();

    json doc;
    doc["elements"] = json::array();
    for (const auto& label : p.labels()) doc["elements"].push_back(label);

    json pairs = json::array();
    for (const auto& [a, b] : p.covers()) pairs.push_back(json::array({p.label(a), p.label(b)}));
    doc["order"] = {{"mode", "covers"}, {"pairs", pairs}};
    doc["lattice"] = {{"derive", true}};

    json lower = json::object(), upper = json::object();
    for (std::size_t i = 0; i < p.size(); ++i) {
        lower[p.label(i)] = p.label(s.lower[i]);
        upper[p.label(i)] = p.label(s.upper[i]);
    }
    doc["lower"] = std::move(lower);
    doc["upper"] = std::move(upper);

    json granulation = json::array();
    for (std::size_t g : s.granulation) granulation.push_back(p.label(g));
    doc["granulation"] = std::move(granulation);

    if (with_profile) {
        auto definite = space::crisp_set(s, space::Crispness::definite);
        std::vector<char> in_c(p.size(), 0);
        for (std::size_t c : definite) in_c[c] = 1;
        json c_arr = json::array(), r_arr = json::array(), phi = json::object(), flags = json::array();
        for (std::size_t c : definite) c_arr.push_back(p.label(c));
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (in_c[x]) continue;
            r_arr.push_back(p.label(x));
            phi[p.label(x)] = json::array({p.label(s.lower[x]), p.label(s.upper[x])});
        }
        for (const char* f : {"F1", "F2", "C1", "C2", "R1", "R2", "R3", "RC1", "RC2"})
            flags.push_back(f);
        doc["profile"] = {{"C", std::move(c_arr)},
                          {"R", std::move(r_arr)},
                          {"phi", std::move(phi)},
                          {"flags", std::move(flags)}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace roughspace::cli
