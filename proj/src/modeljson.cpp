#include "perind/modeljson.hpp"

namespace perind {

namespace {

using nlohmann::json;

json group_to_json(const FgAbelianGroup& g) {
    return json{{"factors", g.factors}, {"free_rank", g.free_rank}};
}

FgAbelianGroup group_from_json(const json& j) {
    FgAbelianGroup g;
    g.factors = j.at("factors").get<std::vector<long long>>();
    g.free_rank = j.at("free_rank").get<int>();
    g.check_normal_form();
    return g;
}

json bits_to_json(gf2::Word w, int dim) {
    json a = json::array();
    for (int i = 0; i < dim; ++i) a.push_back(gf2::get_bit(w, i) ? 1 : 0);
    return a;
}

gf2::Word bits_from_json(const json& j, int dim) {
    if (static_cast<int>(j.size()) != dim) throw MalformedInput("model file: bit vector length");
    gf2::Word w = 0;
    for (int i = 0; i < dim; ++i) {
        int v = j.at(i).get<int>();
        if (v != 0 && v != 1) throw MalformedInput("model file: bit must be 0 or 1");
        if (v) w |= gf2::Word{1} << i;
    }
    return w;
}

}  // namespace

nlohmann::json model_to_json(const ModelFile& f) {
    const SixManifoldModel& m = f.manifold;
    json red2 = json::array();
    for (int i = 0; i < m.red2.rows; ++i) red2.push_back(bits_to_json(m.red2.row[i], m.red2.cols));
    json bock = json::array();
    for (int i = 0; i < m.bock.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.bock.cols; ++j) row.push_back(m.bock.at(i, j));
        bock.push_back(row);
    }
    json manifold{{"H2", group_to_json(m.H2)},
                  {"H3", group_to_json(m.H3)},
                  {"dim_W", m.dim_w},
                  {"red2", red2},
                  {"bock", bock},
                  {"T", m.T.nonzero_triples()},
                  {"v2", bits_to_json(m.v2, m.dim_w)}};
    if (m.c1) manifold["c1"] = *m.c1;
    json doc{{"schema_version", "1"}, {"manifold", manifold}};
    if (!f.name.empty()) doc["name"] = f.name;
    return doc;
}

ModelFile model_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema_version").get<std::string>() != "1")
            throw MalformedInput("model file: unrecognized schema_version");
        ModelFile f;
        f.name = j.value("name", "");
        const json& mj = j.at("manifold");
        SixManifoldModel& m = f.manifold;
        m.H2 = group_from_json(mj.at("H2"));
        m.H3 = group_from_json(mj.at("H3"));
        m.dim_w = mj.at("dim_W").get<int>();
        if (m.dim_w < 0 || m.dim_w > 16) throw MalformedInput("model file: dim_W out of range");

        const json& r2 = mj.at("red2");
        if (static_cast<int>(r2.size()) != m.dim_w)
            throw MalformedInput("model file: red2 row count");
        m.red2 = gf2::BitMat(m.dim_w, m.H2.rank());
        for (int i = 0; i < m.dim_w; ++i) m.red2.row[i] = bits_from_json(r2.at(i), m.H2.rank());

        const json& bk = mj.at("bock");
        if (static_cast<int>(bk.size()) != m.H3.rank())
            throw MalformedInput("model file: bock row count");
        m.bock = Mat(m.H3.rank(), m.dim_w);
        for (int i = 0; i < m.bock.rows; ++i) {
            if (static_cast<int>(bk.at(i).size()) != m.dim_w)
                throw MalformedInput("model file: bock row length");
            for (int c = 0; c < m.dim_w; ++c) m.bock.at(i, c) = bk.at(i).at(c).get<long long>();
        }

        std::vector<std::array<int, 3>> triples;
        for (const json& t : mj.at("T")) {
            if (t.size() != 3) throw MalformedInput("model file: T entries must be triples");
            std::array<int, 3> tr{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
            for (int v : tr)
                if (v < 0 || v >= m.dim_w) throw MalformedInput("model file: T index out of range");
            triples.push_back(tr);
        }
        m.T = forms2::Z2Trilinear::from_triples(m.dim_w, triples);
        m.v2 = bits_from_json(mj.at("v2"), m.dim_w);
        if (mj.contains("c1")) {
            Elem c1 = mj.at("c1").get<Elem>();
            m.H2.check_element(m.H2.reduce(c1));
            m.c1 = m.H2.reduce(c1);
        }
        return f;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("model file: ") + e.what());
    }
}

nlohmann::json report_entry_to_json(const BrauerClassReport& r) {
    json e{{"alpha", r.alpha},
           {"period", r.period},
           {"regime", regime_name(r.regime)},
           {"epsilon_bound", r.epsilon_bound},
           {"tpic", tri_name(r.tpic)}};
    switch (r.index.kind) {
        case IndexValue::Kind::EXACT: e["index_exact"] = r.index.value; break;
        case IndexValue::Kind::INTERVAL_2_4: e["index_interval"] = json::array({2, 4}); break;
        case IndexValue::Kind::DIVIDES: e["index_divides"] = r.index.value; break;
    }
    if (r.certificate_ex) e["certificate_e_x"] = *r.certificate_ex;
    return e;
}

nlohmann::json report_to_json(const Model& m, const std::vector<BrauerClassReport>& reports) {
    json classes = json::array();
    for (const auto& r : reports) classes.push_back(report_entry_to_json(r));
    return json{{"schema_version", "1"}, {"spin_c", m.spin_c()}, {"classes", classes}};
}

}  // namespace perind
