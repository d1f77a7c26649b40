#include "tidiv/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tidiv {

namespace {

using nlohmann::json;

}  // namespace

ProblemFile parse_problem_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.is_object()) throw std::invalid_argument("problem file must be a JSON object");
    ProblemFile p;
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("problem file needs an integer field \"n\"");
    long long n = doc["n"].get<long long>();
    if (n < 1) throw std::invalid_argument("ambient dimension n must be positive");
    p.n = static_cast<std::size_t>(n);

    if (doc.contains("endomorphism")) {
        if (!doc["endomorphism"].is_array())
            throw std::invalid_argument("\"endomorphism\" must be an array of polynomial strings");
        std::vector<std::string> forms;
        for (const auto& e : doc["endomorphism"]) {
            if (!e.is_string())
                throw std::invalid_argument("\"endomorphism\" entries must be strings");
            forms.push_back(e.get<std::string>());
        }
        if (forms.size() != p.n + 1) {
            std::ostringstream os;
            os << "endomorphism needs exactly " << (p.n + 1) << " forms, got " << forms.size();
            throw std::invalid_argument(os.str());
        }
        p.endomorphism = std::move(forms);
    }
    if (doc.contains("divisor")) {
        if (!doc["divisor"].is_string())
            throw std::invalid_argument("\"divisor\" must be a polynomial string");
        p.divisor = doc["divisor"].get<std::string>();
    }
    if (doc.contains("seed")) p.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("iterate")) {
        std::uint64_t l = doc["iterate"].get<std::uint64_t>();
        if (l < 1) throw std::invalid_argument("iterate must be at least 1");
        p.iterate = l;
    }
    if (doc.contains("budgets")) {
        const auto& b = doc["budgets"];
        if (!b.is_object()) throw std::invalid_argument("\"budgets\" must be an object");
        if (b.contains("max_basis")) p.budgets.max_basis_size = b["max_basis"].get<std::size_t>();
        if (b.contains("max_coeff_bits"))
            p.budgets.max_coefficient_bits = b["max_coeff_bits"].get<std::size_t>();
        if (b.contains("trials")) p.budgets.sample_trials = b["trials"].get<std::size_t>();
    }
    return p;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_json(buf.str());
}

ProjPoint parse_proj_point(const std::string& text, std::size_t num_vars) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in point");
        body = body.substr(1, body.size() - 2);
    }
    ProjPoint p;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ':')) {
        // trim whitespace
        std::size_t b = part.find_first_not_of(" \t");
        std::size_t e = part.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coordinate in point");
        p.push_back(rational_from_string(part.substr(b, e - b + 1)));
    }
    if (p.size() != num_vars) {
        std::ostringstream os;
        os << "point needs " << num_vars << " coordinates, got " << p.size();
        throw std::invalid_argument(os.str());
    }
    bool any = false;
    for (const auto& c : p) any = any || c != 0;
    if (!any) throw std::invalid_argument("projective point cannot be all zeros");
    return p;
}

}  // namespace tidiv
