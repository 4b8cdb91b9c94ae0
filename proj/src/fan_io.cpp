#include "toric/fan_io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

long long checked_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw ParseError("fan document: " + what + " must be an integer");
    return j.get<long long>();
}

}  // namespace

FanDocument parse_fan_document(const Json& j)
{
    if (!j.is_object())
        throw ParseError("fan document: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "rank" && key != "rays" && key != "max_cones" && key != "name")
            throw ParseError("fan document: unknown key \"" + key + "\"");
    }
    if (!j.contains("rank") || !j.contains("rays") || !j.contains("max_cones"))
        throw ParseError("fan document: keys rank, rays, max_cones are required");

    FanDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw ParseError("fan document: name must be a string");
        doc.name = j["name"].get<std::string>();
    }

    long long rank = checked_int(j["rank"], "rank");
    if (rank < 1)
        throw ParseError("fan document: rank must be at least 1");
    doc.rank = static_cast<Index>(rank);

    if (!j["rays"].is_array() || j["rays"].empty())
        throw ParseError("fan document: rays must be a nonempty array");
    std::set<std::vector<long long>> seen;
    for (const Json& ray : j["rays"]) {
        if (!ray.is_array() || static_cast<Index>(ray.size()) != doc.rank)
            throw ParseError("fan document: each ray must have rank entries");
        std::vector<long long> v;
        for (const Json& entry : ray)
            v.push_back(checked_int(entry, "ray entry"));
        // Normalize to a primitive vector before checking distinctness.
        long long g = 0;
        for (long long x : v)
            g = std::gcd(g, x);
        if (g == 0)
            throw ParseError("fan document: zero ray");
        for (long long& x : v)
            x /= g;
        if (!seen.insert(v).second)
            throw ParseError("fan document: duplicate rays");
        doc.rays.push_back(std::move(v));
    }

    if (!j["max_cones"].is_array() || j["max_cones"].empty())
        throw ParseError("fan document: max_cones must be a nonempty array");
    std::vector<char> used(doc.rays.size(), 0);
    for (const Json& cone : j["max_cones"]) {
        if (!cone.is_array() || cone.empty())
            throw ParseError("fan document: each maximal cone must be a nonempty array");
        std::set<int> indices;
        std::vector<int> list;
        for (const Json& entry : cone) {
            long long idx = checked_int(entry, "ray index");
            if (idx < 0 || idx >= static_cast<long long>(doc.rays.size()))
                throw ParseError("fan document: ray index out of range");
            if (!indices.insert(static_cast<int>(idx)).second)
                throw ParseError("fan document: repeated ray index in a maximal cone");
            list.push_back(static_cast<int>(idx));
            used[static_cast<size_t>(idx)] = 1;
        }
        doc.max_cones.push_back(std::move(list));
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw ParseError("fan document: ray " + std::to_string(i) +
                             " is not used by any maximal cone");
    return doc;
}

FanDocument parse_fan_document_text(const std::string& text)
{
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("fan document: malformed JSON");
    return parse_fan_document(j);
}

Json to_json(const FanDocument& doc)
{
    Json j;
    if (!doc.name.empty())
        j["name"] = doc.name;
    j["rank"] = doc.rank;
    j["rays"] = doc.rays;
    j["max_cones"] = doc.max_cones;
    return j;
}

std::pair<Fan, FanValidation> build_fan_unchecked(const FanDocument& doc)
{
    std::vector<IntMatrix> max_rays;
    for (const auto& cone : doc.max_cones) {
        IntMatrix rays(doc.rank, static_cast<Index>(cone.size()));
        for (size_t c = 0; c < cone.size(); ++c)
            for (Index i = 0; i < doc.rank; ++i)
                rays(i, static_cast<Index>(c)) =
                    Integer(doc.rays[static_cast<size_t>(cone[c])][static_cast<size_t>(i)]);
        max_rays.push_back(std::move(rays));
    }
    Fan fan = Fan::from_maximal_cones(doc.rank, max_rays);
    return {fan, validate_fan(fan)};
}

Fan build_fan(const FanDocument& doc)
{
    auto [fan, report] = build_fan_unchecked(doc);
    if (!report.ok() || !report.complete) {
        std::vector<std::string> violations = report.violations;
        throw ValidationError("fan validation failed", std::move(violations));
    }
    return fan;
}

FanDocument fan_to_document(const Fan& fan, const std::string& name)
{
    FanDocument doc;
    doc.name = name;
    doc.rank = fan.rank();

    const auto& ray_cones = fan.cones_of_codim(static_cast<int>(fan.rank()) - 1);
    std::vector<ConeKey> ray_keys;
    for (int rc : ray_cones) {
        const IntMatrix& r = fan.cone(rc).rays();
        std::vector<long long> v;
        for (Index i = 0; i < r.rows(); ++i)
            v.push_back(r(i, 0).convert_to<long long>());
        doc.rays.push_back(std::move(v));
        ray_keys.push_back(fan.cone(rc).key());
    }

    for (int m : fan.maximal_cone_indices()) {
        std::vector<int> list;
        const IntMatrix& rays = fan.cone(m).rays();
        for (Index j = 0; j < rays.cols(); ++j) {
            std::vector<Integer> col;
            for (Index i = 0; i < rays.rows(); ++i)
                col.push_back(rays(i, j));
            for (size_t k = 0; k < ray_keys.size(); ++k)
                if (ray_keys[k].size() == 1 && ray_keys[k][0] == col)
                    list.push_back(static_cast<int>(k));
        }
        std::sort(list.begin(), list.end());
        doc.max_cones.push_back(std::move(list));
    }
    std::sort(doc.max_cones.begin(), doc.max_cones.end());
    return doc;
}

namespace {

FanDocument make_doc(const std::string& name, Index rank,
                     std::vector<std::vector<long long>> rays,
                     std::vector<std::vector<int>> max_cones)
{
    FanDocument doc;
    doc.name = name;
    doc.rank = rank;
    doc.rays = std::move(rays);
    doc.max_cones = std::move(max_cones);
    return doc;
}

}  // namespace

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = {"p1",    "p2",          "p3",
                                                   "p1xp1", "hirzebruch:a", "wp112"};
    return names;
}

FanDocument builtin_fan(const std::string& name)
{
    if (name == "p1")
        return make_doc("p1", 1, {{1}, {-1}}, {{0}, {1}});
    if (name == "p2")
        return make_doc("p2", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "p3")
        return make_doc("p3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "p1xp1")
        return make_doc("p1xp1", 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                        {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (name == "wp112")
        return make_doc("wp112", 2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
    if (name.rfind("hirzebruch:", 0) == 0) {
        const std::string arg = name.substr(std::string("hirzebruch:").size());
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw UnknownBuiltin("unknown builtin fan \"" + name + "\"");
        long long a = std::stoll(arg);
        return make_doc(name, 2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                        {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    }
    throw UnknownBuiltin("unknown builtin fan \"" + name + "\"");
}

namespace {

// Exact angular order on nonzero integer vectors: upper half plane first
// (y > 0, or y == 0 and x > 0), counterclockwise within each half.
bool angle_less(const std::pair<long long, long long>& a,
                const std::pair<long long, long long>& b)
{
    auto half = [](const std::pair<long long, long long>& v) {
        return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
    };
    if (half(a) != half(b))
        return half(a) < half(b);
    long long cross = a.first * b.second - a.second * b.first;
    return cross > 0;
}

}  // namespace

Fan random_complete_fan_2d(std::mt19937_64& rng, int num_rays)
{
    std::uniform_int_distribution<long long> coord(-9, 9);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::set<std::pair<long long, long long>> chosen;
        while (static_cast<int>(chosen.size()) < num_rays) {
            long long x = coord(rng), y = coord(rng);
            long long g = std::gcd(x, y);
            if (g == 0)
                continue;
            chosen.insert({x / g, y / g});
        }
        std::vector<std::pair<long long, long long>> rays(chosen.begin(), chosen.end());
        std::sort(rays.begin(), rays.end(), angle_less);

        bool gaps_ok = true;
        for (size_t i = 0; i < rays.size() && gaps_ok; ++i) {
            const auto& a = rays[i];
            const auto& b = rays[(i + 1) % rays.size()];
            gaps_ok = a.first * b.second - a.second * b.first > 0;
        }
        if (!gaps_ok)
            continue;

        std::vector<IntMatrix> max_cones;
        for (size_t i = 0; i < rays.size(); ++i) {
            const auto& a = rays[i];
            const auto& b = rays[(i + 1) % rays.size()];
            IntMatrix m(2, 2);
            m(0, 0) = Integer(a.first);
            m(1, 0) = Integer(a.second);
            m(0, 1) = Integer(b.first);
            m(1, 1) = Integer(b.second);
            max_cones.push_back(std::move(m));
        }
        return Fan::from_maximal_cones(2, max_cones);
    }
    throw InvariantError("random_complete_fan_2d: sampling failed");
}

std::vector<int> random_orientations(std::mt19937_64& rng, const Fan& fan)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> signs(static_cast<size_t>(fan.num_cones()));
    for (auto& s : signs)
        s = coin(rng) ? 1 : -1;
    return signs;
}

}  // namespace toric
