#include "ltf/rs_template.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ltf/triangles.hpp"

namespace ltf {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t next_prime(std::int64_t n) {
    if (n < 2) n = 2;
    while (!is_prime(n)) ++n;
    return n;
}

Template rs_template(const ApFreeSet& differences, std::int64_t t, std::size_t r,
                     std::size_t verify_cap) {
    if (r < 2) throw InvalidInput("template uniformity must be at least 2");
    if (!is_prime(t)) throw InvalidInput("template modulus " + std::to_string(t) + " is not prime");
    if (t <= static_cast<std::int64_t>(r) - 1)
        throw InvalidInput("template modulus must exceed r - 1");
    if (differences.ambient != Ambient::cyclic(t))
        throw InvalidInput("difference set must live in Z_" + std::to_string(t));
    if (!differences.verified) throw InvalidInput("difference set is not verified 3-AP-free");

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(differences.size() * static_cast<std::size_t>(t));
    for (std::int64_t gamma = 0; gamma < t; ++gamma) {
        for (auto a : differences.elements) {
            auto& e = edges.emplace_back(r);
            for (std::size_t i = 0; i < r; ++i) {
                const auto step = static_cast<std::int64_t>(i);
                e[i] = static_cast<Vertex>(step * t + (gamma + step * a) % t);
            }
        }
    }

    Template tpl;
    tpl.graph = Hypergraph::build(r * static_cast<std::size_t>(t), r, std::move(edges));
    tpl.r = r;
    tpl.t = t;
    tpl.differences = differences;
    if (tpl.graph.num_edges() <= verify_cap) {
        if (!is_linear(tpl.graph)) throw InvalidInput("rejected: H(A, Z_t) is not linear for these parameters");
        if (!is_tfree(tpl.graph)) throw InvalidInput("rejected: H(A, Z_t) contains a loose triangle for these parameters");
        tpl.verified = true;
    }
    return tpl;
}

Template template_for(std::int64_t t_target, std::size_t r, std::size_t verify_cap) {
    const std::int64_t t = next_prime(std::max<std::int64_t>(t_target, static_cast<std::int64_t>(r)));
    const auto spread = std::max<std::int64_t>(3, static_cast<std::int64_t>(r) - 1);
    const ApFreeSet base = best_template_differences((t - 1) / spread, r);
    return rs_template(embed_cyclic(base, t), t, r, verify_cap);
}

void write_template(std::ostream& out, const Template& tpl) {
    std::ostringstream header;
    header << " template r=" << tpl.r << " t=" << tpl.t << " A=";
    for (std::size_t i = 0; i < tpl.differences.elements.size(); ++i)
        header << (i ? "," : "") << tpl.differences.elements[i];
    const std::string comments[] = {header.str()};
    write_hypergraph(out, tpl.graph, comments);
}

Template read_template(std::istream& in, std::size_t verify_cap) {
    HypergraphFile file = read_hypergraph(in);
    for (const auto& c : file.comments) {
        std::istringstream is(c);
        std::string word;
        if (!(is >> word) || word != "template") continue;
        std::size_t r = 0;
        std::int64_t t = 0;
        std::vector<std::int64_t> a;
        bool have_r = false, have_t = false, have_a = false;
        while (is >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) throw InvalidInput("malformed template header field '" + word + "'");
            const auto key = word.substr(0, eq);
            const auto value = word.substr(eq + 1);
            try {
                if (key == "r") {
                    r = std::stoul(value);
                    have_r = true;
                } else if (key == "t") {
                    t = std::stoll(value);
                    have_t = true;
                } else if (key == "A") {
                    have_a = true;
                    std::istringstream vs(value);
                    for (std::string item; std::getline(vs, item, ',');)
                        if (!item.empty()) a.push_back(std::stoll(item));
                }
            } catch (const std::logic_error&) {
                throw InvalidInput("malformed template header value '" + word + "'");
            }
        }
        if (!have_r || !have_t || !have_a) throw InvalidInput("template header needs r=, t= and A=");
        Template tpl = rs_template(make_apfree(std::move(a), Ambient::cyclic(t), r), t, r, verify_cap);
        if (!(tpl.graph == file.graph)) throw InvalidInput("template edges do not match H(A, Z_t) for the header");
        return tpl;
    }
    throw InvalidInput("missing '# template r=.. t=.. A=..' header line");
}

Template read_template_file(const std::string& path, std::size_t verify_cap) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_template(in, verify_cap);
}

}  // namespace ltf
