#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "perind/grouptransfer.hpp"
#include "perind/modeljson.hpp"
#include "perind/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitTpicFails = 3;
constexpr int kExitUsage = 64;

perind::ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw perind::MalformedInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw perind::MalformedInput(std::string("bad JSON: ") + e.what());
    }
    return perind::model_from_json(j);
}

perind::gf2::Word parse_bits(const std::string& s, int dim) {
    if (static_cast<int>(s.size()) != dim)
        throw perind::MalformedInput("bit string must have length " + std::to_string(dim));
    perind::gf2::Word w = 0;
    for (int i = 0; i < dim; ++i) {
        if (s[i] != '0' && s[i] != '1') throw perind::MalformedInput("bit string: use 0/1 only");
        if (s[i] == '1') w |= perind::gf2::Word{1} << i;
    }
    return w;
}

std::string bits_str(perind::gf2::Word w, int dim) {
    std::string s(dim, '0');
    for (int i = 0; i < dim; ++i)
        if (perind::gf2::get_bit(w, i)) s[i] = '1';
    return s;
}

std::string elem_str(const perind::Elem& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

std::string index_str(const perind::IndexValue& v) {
    switch (v.kind) {
        case perind::IndexValue::Kind::EXACT: return std::to_string(v.value);
        case perind::IndexValue::Kind::INTERVAL_2_4: return "{2,4}";
        case perind::IndexValue::Kind::DIVIDES: return "divides " + std::to_string(v.value);
    }
    return "?";
}

// words in the generators a (order n) and b (the involution), e.g. "a^2b"
int parse_group_word(const perind::FiniteGroupTable& g, long long n, const std::string& word) {
    int elem = g.identity();
    size_t i = 0;
    while (i < word.size()) {
        char c = word[i++];
        if (c != 'a' && c != 'b') throw perind::MalformedInput("group word: use a and b");
        long long exp = 1;
        if (i < word.size() && word[i] == '^') {
            ++i;
            size_t start = i;
            if (i < word.size() && word[i] == '-') ++i;
            while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
            if (i == start) throw perind::MalformedInput("group word: missing exponent");
            exp = std::stoll(word.substr(start, i - start));
        }
        int base = c == 'a' ? (n > 1 ? 1 : 0) : static_cast<int>(n);
        elem = g.mul(elem, g.pow(base, exp));
    }
    return elem;
}

std::string factors_str(const perind::FgAbelianGroup& g) {
    if (g.is_trivial()) return "trivial";
    std::string s;
    for (size_t i = 0; i < g.factors.size(); ++i)
        s += (i ? " x " : "") + ("C" + std::to_string(g.factors[i]));
    for (int i = 0; i < g.free_rank; ++i) s += (s.empty() && i == 0 ? "Z" : " x Z");
    return s;
}

int cmd_validate(const std::string& path) {
    perind::ModelFile f = load_model(path);
    perind::ValidationReport rep = perind::validate(f.manifold);
    if (rep.pass) {
        std::cout << "pass (spin^c: " << (f.manifold.c1 ? "true" : "false") << ")\n";
        return kExitOk;
    }
    std::cout << "fail\n" << rep.describe();
    return kExitInvariant;
}

int cmd_report(const std::string& path, bool as_json) {
    perind::ModelFile f = load_model(path);
    perind::Model m(f.manifold);
    auto reports = perind::tpic_report(m);
    bool fails = false;
    for (const auto& r : reports) fails = fails || r.tpic == perind::Tri::NO;
    if (as_json) {
        std::cout << perind::report_to_json(m, reports).dump(2) << "\n";
    } else {
        std::cout << "spin^c: " << (m.spin_c() ? "true" : "false") << "\n";
        for (const auto& r : reports)
            std::cout << "alpha=" << elem_str(r.alpha) << " per=" << r.period
                      << " ind=" << index_str(r.index) << " regime=" << regime_name(r.regime)
                      << " bound=" << r.epsilon_bound << " tpic=" << tri_name(r.tpic) << "\n";
        std::cout << (fails ? "TPIC FAILS" : "TPIC HOLDS") << "\n";
    }
    return fails ? kExitTpicFails : kExitOk;
}

int cmd_solve_ex(const std::string& path, const std::string& xbits) {
    perind::ModelFile f = load_model(path);
    perind::Model m(f.manifold);
    perind::gf2::Word x = parse_bits(xbits, m.dim_w());
    perind::Elem ex = perind::solve_ex(m, x);
    std::cout << "e_x = " << elem_str(ex) << "\n";
    return kExitOk;
}

int cmd_membership(const std::string& path, const std::string& xbits) {
    perind::ModelFile f = load_model(path);
    perind::Model m(f.manifold);
    perind::gf2::Word x = parse_bits(xbits, m.dim_w());
    perind::MembershipResult r = perind::membership(m, x);
    if (r.member)
        std::cout << "MEMBER witness=" << elem_str(r.witness) << "\n";
    else
        std::cout << "NON_MEMBER\n";
    return kExitOk;
}

int cmd_diag_solve(const std::string& rows) {
    std::vector<std::string> parts;
    std::stringstream ss(rows);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    const int n = static_cast<int>(parts.size());
    perind::gf2::BitMat a(n, n);
    for (int i = 0; i < n; ++i) a.row[i] = parse_bits(parts[i], n);
    perind::forms2::Z2SymForm form(n, a);
    perind::gf2::Word d = perind::forms2::solve_diagonal(form);
    std::cout << "d = " << bits_str(d, n) << "\n";
    return kExitOk;
}

int cmd_abelianize(long long n, long long k) {
    perind::Abelianization ab = perind::abelianization(perind::build_semidirect(n, k));
    std::cout << "H1 = " << factors_str(ab.group) << "\n";
    return kExitOk;
}

int cmd_transfer(long long n, long long k, const std::string& word) {
    perind::FiniteGroupTable g = perind::build_semidirect(n, k);
    std::vector<uint8_t> character(g.order());
    for (int i = 0; i < g.order(); ++i) character[i] = i >= n;
    perind::IndexTwoData d = perind::make_index_two(g, character);
    perind::TransferResult t = perind::transfer_index2(d);

    int elem = parse_group_word(g, n, word);
    perind::Elem gcoord = perind::abelianized(t.g_ab, elem);
    perind::Elem image = t.map.apply(gcoord);

    // H = <a> is cyclic, so the image is a power of a; find which one
    long long power = -1;
    for (long long i = 0; i < n && power < 0; ++i)
        if (t.h_ab.group.equal(perind::abelianized(t.h_ab, static_cast<int>(i)), image)) power = i;
    perind::OrderResult o = perind::element_order(t.h_ab.group, image);
    std::cout << "transfer(" << word << ") = a^" << power
              << (t.h_ab.group.is_zero(image) ? " (zero)" : " (nonzero)") << ", order " << o.order
              << "\n";
    return kExitOk;
}

int cmd_emit(const std::string& name, const std::string& out_path) {
    perind::ModelFile f;
    f.name = name;
    if (name == "teichner-orientable")
        f.manifold = perind::model_a_teichner_orientable();
    else if (name == "teichner-nonorientable")
        f.manifold = perind::model_b_teichner_nonorientable();
    else
        throw perind::MalformedInput("unknown example name: " + name);
    std::ofstream out(out_path);
    if (!out) throw perind::MalformedInput("cannot write " + out_path);
    out << perind::model_to_json(f).dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(int max_dim, std::vector<long long> factors, bool assert_certificates) {
    perind::TheoremSweepStats s = perind::theorem_sweep_parallel(max_dim, factors);
    std::cout << "models=" << s.models << " spin_c=" << s.spin_c_models
              << " certificates=" << s.certificates
              << " non_member_on_spin_c=" << s.non_member_on_spin_c << " checksum=" << std::hex
              << s.checksum << std::dec << "\n";
    if (assert_certificates && s.non_member_on_spin_c != 0) return kExitTpicFails;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"period/index computations on 6-manifold cohomology models"};
    app.require_subcommand(1);

    std::string path, xbits, matrix_rows, name, out_path = "model.json", semidirect, word;
    bool as_json = false, assert_flag = false;
    int max_dim = 3;
    std::vector<long long> factors{2, 4};

    auto* validate = app.add_subcommand("validate", "check model invariants");
    validate->add_option("file", path)->required();

    auto* report = app.add_subcommand("report", "period/index report for every torsion class");
    report->add_option("file", path)->required();
    report->add_flag("--json", as_json);

    auto* solveex = app.add_subcommand("solve-ex", "certificate class e_x for a mod-2 class");
    solveex->add_option("file", path)->required();
    solveex->add_option("--x", xbits)->required();

    auto* member = app.add_subcommand("membership", "is beta(x^2) in beta(x) H2?");
    member->add_option("file", path)->required();
    member->add_option("--x", xbits)->required();

    auto* forms = app.add_subcommand("forms", "symmetric GF(2) form utilities");
    auto* diag = forms->add_subcommand("diag-solve", "solve A d = diag(A)");
    diag->add_option("--matrix", matrix_rows, "rows as comma-separated bit strings")->required();
    forms->require_subcommand(1);

    auto* group = app.add_subcommand("group", "finite group computations");
    auto* abel = group->add_subcommand("abelianize", "invariant factors of G/[G,G]");
    abel->add_option("--semidirect", semidirect, "n,k for C_n x| C_2")->required();
    auto* transfer = group->add_subcommand("transfer", "index-2 transfer image");
    transfer->add_option("--semidirect", semidirect)->required();
    transfer->add_option("--element", word)->required();
    group->require_subcommand(1);

    auto* examples = app.add_subcommand("examples", "built-in models and sweeps");
    auto* emit = examples->add_subcommand("emit", "write a built-in model file");
    emit->add_option("--name", name)->required();
    emit->add_option("-o,--output", out_path);
    auto* sweep = examples->add_subcommand("sweep", "enumerate and classify all valid models");
    sweep->add_option("--max-dim", max_dim);
    sweep->add_option("--factors", factors)->delimiter(',');
    sweep->add_flag("--assert-certificates", assert_flag,
                    "fail if any spin^c model lacks a certificate");
    examples->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(path);
        if (*report) return cmd_report(path, as_json);
        if (*solveex) return cmd_solve_ex(path, xbits);
        if (*member) return cmd_membership(path, xbits);
        if (*diag) return cmd_diag_solve(matrix_rows);
        if (*abel || *transfer) {
            auto comma = semidirect.find(',');
            if (comma == std::string::npos)
                throw perind::MalformedInput("--semidirect wants n,k");
            long long n = std::stoll(semidirect.substr(0, comma));
            long long k = std::stoll(semidirect.substr(comma + 1));
            return *abel ? cmd_abelianize(n, k) : cmd_transfer(n, k, word);
        }
        if (*emit) return cmd_emit(name, out_path);
        if (*sweep) return cmd_sweep(max_dim, factors, assert_flag);
    } catch (const perind::InvalidModel& e) {
        std::cerr << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitUsage;
}
