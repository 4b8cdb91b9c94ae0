#include "toric/reporting.hpp"

#include <limits>
#include <sstream>

namespace toric {

OutputFormat parse_format(const std::string& name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    throw InputError("unknown output format \"" + name + "\"");
}

Json json_of_integer(const Integer& x)
{
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi)
        return x.convert_to<long long>();
    return x.str();
}

Json json_of_group(const FgAbGroup& g)
{
    Json torsion = Json::array();
    for (const Integer& d : g.torsion)
        torsion.push_back(json_of_integer(d));
    return Json{{"rank", g.rank}, {"torsion", torsion}};
}

std::string Rendered::in(OutputFormat f) const
{
    switch (f) {
    case OutputFormat::json:
        return json.dump(2) + "\n";
    case OutputFormat::csv:
        return csv;
    case OutputFormat::text:
    default:
        return text;
    }
}

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

std::string join_torsion(const FgAbGroup& g)
{
    std::ostringstream os;
    for (size_t i = 0; i < g.torsion.size(); ++i)
        os << (i ? ";" : "") << g.torsion[i];
    return os.str();
}

Json rays_of(const Cone& c)
{
    Json out = Json::array();
    for (Index j = 0; j < c.rays().cols(); ++j) {
        Json ray = Json::array();
        for (Index i = 0; i < c.rays().rows(); ++i)
            ray.push_back(json_of_integer(c.rays()(i, j)));
        out.push_back(ray);
    }
    return out;
}

Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j)
            row.push_back(json_of_integer(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Rendered render_validation(const Fan& fan, const FanValidation& report)
{
    Rendered r;
    Json counts = Json::array();
    for (int k = 0; k <= static_cast<int>(fan.rank()); ++k)
        counts.push_back(fan.cones_of_codim(k).size());
    r.json = Json{{"rank", fan.rank()},
                  {"cones_by_codim", counts},
                  {"valid", report.ok()},
                  {"complete", report.complete},
                  {"violations", report.violations}};

    std::ostringstream text;
    text << "rank: " << fan.rank() << "\n";
    text << "cones by codim:";
    for (int k = 0; k <= static_cast<int>(fan.rank()); ++k)
        text << " " << fan.cones_of_codim(k).size();
    text << "\n";
    text << "valid: " << (report.ok() ? "yes" : "no") << "\n";
    text << "complete: " << (report.complete ? "yes" : "no") << "\n";
    for (const auto& v : report.violations)
        text << "violation: " << v << "\n";
    r.text = text.str();

    std::ostringstream csv;
    csv << "field,value\n";
    csv << "rank," << fan.rank() << "\n";
    csv << "valid," << (report.ok() ? "true" : "false") << "\n";
    csv << "complete," << (report.complete ? "true" : "false") << "\n";
    for (const auto& v : report.violations)
        csv << "violation," << csv_quote(v) << "\n";
    r.csv = csv.str();
    return r;
}

Rendered render_cech(const Fan& fan, const ChainComplex& cpx,
                     const std::vector<FgAbGroup>& homology, bool augmentation_ok)
{
    Rendered r;
    Json ranks = Json::array(), labels = Json::array(), diffs = Json::array(),
         hom = Json::array();
    for (int k = 0; k <= cpx.top_degree(); ++k) {
        ranks.push_back(cpx.rank(k));
        Json level = Json::array();
        for (int idx : cpx.basis[static_cast<size_t>(k)])
            level.push_back(rays_of(fan.cone(idx)));
        labels.push_back(level);
        hom.push_back(json_of_group(homology[static_cast<size_t>(k)]));
        if (k >= 1)
            diffs.push_back(matrix_json(cpx.boundary[static_cast<size_t>(k)]));
    }
    r.json = Json{{"rank", fan.rank()},       {"ranks", ranks},
                  {"labels", labels},         {"differentials", diffs},
                  {"homology", hom},          {"augmentation_ok", augmentation_ok}};

    std::ostringstream text;
    text << "ranks by codim:";
    for (int k = 0; k <= cpx.top_degree(); ++k)
        text << " " << cpx.rank(k);
    text << "\n";
    for (int k = 0; k <= cpx.top_degree(); ++k)
        text << "H_" << k << " = " << homology[static_cast<size_t>(k)].to_string() << "\n";
    text << "augmentation: " << (augmentation_ok ? "ok" : "fails") << "\n";
    for (int k = 1; k <= cpx.top_degree(); ++k) {
        text << "d_" << k << ":\n";
        const IntMatrix& d = cpx.boundary[static_cast<size_t>(k)];
        for (Index i = 0; i < d.rows(); ++i) {
            text << " ";
            for (Index j = 0; j < d.cols(); ++j)
                text << " " << d(i, j);
            text << "\n";
        }
    }
    r.text = text.str();

    std::ostringstream csv;
    csv << "k,rank,homology_rank,homology_torsion\n";
    for (int k = 0; k <= cpx.top_degree(); ++k)
        csv << k << "," << cpx.rank(k) << "," << homology[static_cast<size_t>(k)].rank << ","
            << join_torsion(homology[static_cast<size_t>(k)]) << "\n";
    csv << "augmentation_ok," << (augmentation_ok ? "true" : "false") << ",,\n";
    r.csv = csv.str();
    return r;
}

Rendered render_flags(const SimplicialComplex& k, const std::vector<FgAbGroup>& homology)
{
    Rendered r;
    Json fvec = Json::array(), hom = Json::array();
    for (int d = 0; d <= k.dim(); ++d)
        fvec.push_back(k.simplex_count(d));
    for (const auto& g : homology)
        hom.push_back(json_of_group(g));
    r.json = Json{{"f_vector", fvec},
                  {"euler", k.euler_characteristic()},
                  {"reduced_homology", hom}};

    std::ostringstream text;
    text << "f-vector:";
    for (int d = 0; d <= k.dim(); ++d)
        text << " " << k.simplex_count(d);
    text << "\neuler: " << k.euler_characteristic() << "\n";
    for (size_t d = 0; d < homology.size(); ++d)
        text << "H~_" << d << " = " << homology[d].to_string() << "\n";
    r.text = text.str();

    std::ostringstream csv;
    csv << "k,simplices,homology_rank,homology_torsion\n";
    for (int d = 0; d <= k.dim(); ++d)
        csv << d << "," << k.simplex_count(d) << "," << homology[static_cast<size_t>(d)].rank
            << "," << join_torsion(homology[static_cast<size_t>(d)]) << "\n";
    csv << "euler," << k.euler_characteristic() << ",,\n";
    r.csv = csv.str();
    return r;
}

namespace {

const char* mode_name(Mode m)
{
    return m == Mode::morphic ? "morphic" : "singular";
}

}  // namespace

Rendered render_e1(const E1Page& page)
{
    Rendered r;
    Json blocks = Json::array();
    for (int s = 0; s <= static_cast<int>(page.rank); ++s)
        for (int rr = 0; rr <= s; ++rr)
            blocks.push_back(Json{{"r", rr}, {"s", s}, {"rank", page.block_rank(rr, s)}});
    r.json = Json{{"mode", mode_name(page.mode)}, {"rank", page.rank}, {"blocks", blocks}};

    std::ostringstream text;
    text << "E1 block ranks (rows s, columns r):\n";
    for (int s = 0; s <= static_cast<int>(page.rank); ++s) {
        text << "s=" << s << ":";
        for (int rr = 0; rr <= s; ++rr)
            text << " " << page.block_rank(rr, s);
        text << "\n";
    }
    r.text = text.str();

    std::ostringstream csv;
    csv << "r,s,rank\n";
    for (int s = 0; s <= static_cast<int>(page.rank); ++s)
        for (int rr = 0; rr <= s; ++rr)
            csv << rr << "," << s << "," << page.block_rank(rr, s) << "\n";
    r.csv = csv.str();
    return r;
}

Rendered render_e2(const E2Page& e2)
{
    Rendered r;
    Json groups = Json::array();
    for (int s = 0; s <= static_cast<int>(e2.rank); ++s) {
        for (int rr = 0; rr <= s; ++rr) {
            Json g = json_of_group(e2.at(rr, s));
            groups.push_back(
                Json{{"r", rr}, {"s", s}, {"rank", g["rank"]}, {"torsion", g["torsion"]}});
        }
    }
    r.json = Json{{"mode", mode_name(e2.mode)}, {"rank", e2.rank}, {"groups", groups}};

    std::ostringstream text;
    text << "E2 page (rows s, columns r):\n";
    for (int s = 0; s <= static_cast<int>(e2.rank); ++s) {
        text << "s=" << s << ":";
        for (int rr = 0; rr <= s; ++rr)
            text << "  " << e2.at(rr, s).to_string();
        text << "\n";
    }
    r.text = text.str();

    std::ostringstream csv;
    csv << "r,s,rank,torsion\n";
    for (int s = 0; s <= static_cast<int>(e2.rank); ++s)
        for (int rr = 0; rr <= s; ++rr)
            csv << rr << "," << s << "," << e2.at(rr, s).rank << ","
                << join_torsion(e2.at(rr, s)) << "\n";
    r.csv = csv.str();
    return r;
}

Rendered render_morphic(const std::vector<std::vector<long long>>& table, int qmax)
{
    Rendered r;
    Json rows = Json::array();
    for (const auto& row : table)
        rows.push_back(row);
    r.json = Json{{"qmax", qmax}, {"table", rows}};

    const size_t cols = table.empty() ? 0 : table[0].size();
    std::ostringstream text;
    text << "rank of L^qH^n (rows q = 0.." << qmax << ", columns n = 0.." << cols - 1 << "):\n";
    for (size_t q = 0; q < table.size(); ++q) {
        text << "q=" << q << ":";
        for (long long v : table[q])
            text << " " << v;
        text << "\n";
    }
    r.text = text.str();

    std::ostringstream csv;
    csv << "q";
    for (size_t nn = 0; nn < cols; ++nn)
        csv << "," << nn;
    csv << "\n";
    for (size_t q = 0; q < table.size(); ++q) {
        csv << q;
        for (long long v : table[q])
            csv << "," << v;
        csv << "\n";
    }
    r.csv = csv.str();
    return r;
}

Rendered render_betti(const std::vector<long long>& betti, long long euler)
{
    Rendered r;
    r.json = Json{{"betti", betti}, {"euler", euler}};

    std::ostringstream text;
    text << "betti:";
    for (long long b : betti)
        text << " " << b;
    text << "\neuler: " << euler << "\n";
    r.text = text.str();

    std::ostringstream csv;
    for (size_t i = 0; i < betti.size(); ++i)
        csv << (i ? "," : "") << "b" << i;
    csv << ",euler\n";
    for (size_t i = 0; i < betti.size(); ++i)
        csv << (i ? "," : "") << betti[i];
    csv << "," << euler << "\n";
    r.csv = csv.str();
    return r;
}

Rendered render_oracle(const OracleReport& report)
{
    Rendered r;
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.json = Json{{"all_pass", report.all_pass}, {"checks", checks}};

    std::ostringstream text;
    for (const auto& c : report.checks) {
        text << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (!c.detail.empty())
            text << " (" << c.detail << ")";
        text << "\n";
    }
    text << (report.all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    r.text = text.str();

    std::ostringstream csv;
    csv << "check,pass,detail\n";
    for (const auto& c : report.checks)
        csv << csv_quote(c.name) << "," << (c.pass ? "true" : "false") << ","
            << csv_quote(c.detail) << "\n";
    r.csv = csv.str();
    return r;
}

}  // namespace toric
