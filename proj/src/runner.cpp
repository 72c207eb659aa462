#include "sftlab/runner.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "sftlab/render.hpp"

namespace sftlab {

namespace {

using ojson = nlohmann::ordered_json;

// Listings above this size stay count-only so reports keep a sane size.
constexpr std::size_t kListCap = 1024;

ojson pattern_json(const Pattern& p, const Alphabet& alphabet) {
    ojson support = ojson::array();
    ojson symbols = ojson::array();
    for (const auto& [cell, sym] : p.cells) {
        support.push_back(cell);
        symbols.push_back(alphabet.name_of(sym));
    }
    return ojson{{"support", support}, {"symbols", symbols}};
}

ojson block_json(const std::vector<Symbol>& flat, const Alphabet& alphabet) {
    ojson row = ojson::array();
    for (Symbol s : flat) row.push_back(alphabet.name_of(s));
    return row;
}

ojson language_json(const BlockLanguage& l) {
    ojson j;
    j["resolution"] = l.resolution;
    j["count"] = l.blocks.size();
    if (l.blocks.size() <= kListCap) {
        ojson blocks = ojson::array();
        for (const auto& b : l.blocks) blocks.push_back(block_json(b, l.alphabet));
        j["blocks"] = blocks;
    }
    return j;
}

ojson dyadic_json(const DyadicDistance& d) {
    return ojson{{"kind", d.kind == DyadicDistance::Kind::exact ? "exact" : "at_most"},
                 {"exponent", d.exponent},
                 {"display", d.to_string()}};
}

ojson witness_json(const PeriodicWitness& w, const Alphabet& alphabet) {
    return ojson{{"period", w.period}, {"assignment", pattern_json(w.domain, alphabet)}};
}

int to_i(const std::string& s) { return static_cast<int>(std::stoll(s)); }

class Exec {
  public:
    Exec(const Document& doc, const RunOptions& opt) : doc_(doc), opt_(opt) {}

    ojson result(const Command& cmd, std::size_t index) {
        index_ = index;
        const auto& a = cmd.args;
        const std::string& op = cmd.op;
        if (op == "blocks") return do_blocks(a);
        if (op == "boxes") return do_boxes(a);
        if (op == "empty") return do_empty(a);
        if (op == "witness") return do_witness(a);
        if (op == "dist") return do_dist(a);
        if (op == "transition") return do_transition(a);
        if (op == "stability") return do_stability(a);
        if (op == "image") return do_image(a);
        if (op == "imagecheck") return do_imagecheck(a);
        if (op == "refine") return do_refine(a);
        if (op == "compose") return do_compose(a);
        if (op == "encode") return do_encode(a);
        if (op == "decode") return do_decode(a);
        if (op == "colorbases") return do_colorbases(a);
        if (op == "orbit") return do_orbit(a);
        if (op == "syndetic") return do_syndetic(a);
        if (op == "perturb") return do_perturb(a);
        if (op == "product") return do_product(a);
        throw Error("unknown command '" + op + "'");
    }

  private:
    const Document& doc_;
    const RunOptions& opt_;
    std::size_t index_ = 0;

    const Sft& sft(const std::string& name) const { return doc_.sfts.at(name); }
    const SlidingBlockCode& code(const std::string& name) const { return doc_.codes.at(name); }
    const ToeplitzSpec& top(const std::string& name) const { return doc_.toeplitz.at(name); }

    // PGM images for 2d listings, one file per pattern, when asked for.
    int render_patterns(const std::vector<Pattern>& ps, const std::string& tag) {
        if (opt_.render_dir.empty() || doc_.dim != 2 || ps.size() > kListCap) return 0;
        std::filesystem::create_directories(opt_.render_dir);
        int written = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::ostringstream name;
            name << "c" << std::setw(3) << std::setfill('0') << index_ << "_" << tag << "_"
                 << std::setw(6) << std::setfill('0') << i << ".pgm";
            render_pgm(ps[i], doc_.alphabet,
                       (std::filesystem::path(opt_.render_dir) / name.str()).string());
            ++written;
        }
        return written;
    }

    ojson do_blocks(const std::vector<std::string>& a) {
        BlockLanguage l = admissible_blocks(sft(a[0]), to_i(a[1]), opt_.block_budget);
        ojson j = language_json(l);
        if (!opt_.render_dir.empty() && doc_.dim == 2) {
            std::vector<Pattern> ps;
            if (l.blocks.size() <= kListCap)
                for (const auto& b : l.blocks) ps.push_back(l.block_pattern(b));
            j["rendered"] = render_patterns(ps, "blocks_" + a[0]);
        }
        return j;
    }

    ojson do_boxes(const std::vector<std::string>& a) {
        std::vector<int> extents;
        for (std::size_t i = 1; i < a.size(); ++i) extents.push_back(to_i(a[i]));
        std::vector<Pattern> ps = admissible_boxes(sft(a[0]), extents, opt_.block_budget);
        ojson j;
        j["count"] = ps.size();
        if (ps.size() <= kListCap) {
            ojson arr = ojson::array();
            for (const Pattern& p : ps) arr.push_back(pattern_json(p, doc_.alphabet));
            j["patterns"] = arr;
        }
        if (!opt_.render_dir.empty() && doc_.dim == 2)
            j["rendered"] = render_patterns(ps, "boxes_" + a[0]);
        return j;
    }

    ojson do_empty(const std::vector<std::string>& a) {
        EmptinessVerdict v = emptiness_semidecide(sft(a[0]), to_i(a[1]), opt_.block_budget);
        ojson j;
        switch (v.kind) {
            case EmptinessVerdict::Kind::empty:
                j["verdict"] = "empty";
                j["certificate_resolution"] = v.certificate_resolution;
                break;
            case EmptinessVerdict::Kind::nonempty:
                j["verdict"] = "nonempty";
                j["witness"] = witness_json(*v.witness, sft(a[0]).alphabet);
                break;
            case EmptinessVerdict::Kind::unknown:
                j["verdict"] = "unknown";
                j["budget"] = v.budget;
                break;
        }
        return j;
    }

    ojson do_witness(const std::vector<std::string>& a) {
        auto w = periodic_witness_search(sft(a[0]), to_i(a[1]));
        ojson j;
        j["found"] = w.has_value();
        if (w) j["witness"] = witness_json(*w, sft(a[0]).alphabet);
        return j;
    }

    ojson do_dist(const std::vector<std::string>& a) {
        int n = to_i(a[2]);
        BlockLanguage la = admissible_blocks(sft(a[0]), n, opt_.block_budget);
        BlockLanguage lb = admissible_blocks(sft(a[1]), n, opt_.block_budget);
        return dyadic_json(hausdorff_proxy(la, lb, n));
    }

    ojson do_transition(const std::vector<std::string>& a) {
        BlockLanguage l = admissible_blocks(sft(a[0]), to_i(a[1]), opt_.block_budget);
        Sft y = transition_sft(l);
        ojson j;
        j["forbidden_count"] = y.forbidden.size();
        if (y.forbidden.size() <= kListCap) {
            ojson arr = ojson::array();
            for (const Pattern& p : y.forbidden) arr.push_back(pattern_json(p, y.alphabet));
            j["forbidden"] = arr;
        }
        return j;
    }

    ojson do_stability(const std::vector<std::string>& a) {
        return ojson{{"radius", stability_radius(sft(a[0]), code(a[1]))}};
    }

    ojson do_image(const std::vector<std::string>& a) {
        return language_json(image_language(sft(a[0]), code(a[1]), to_i(a[2]), opt_.block_budget));
    }

    ojson do_imagecheck(const std::vector<std::string>& a) {
        BlockLanguage l = admissible_blocks(sft(a[0]), to_i(a[1]), opt_.block_budget);
        const SlidingBlockCode& c = code(a[2]);
        const Sft& target = sft(a[3]);
        ImageCheck ck = image_in_sft_check(l, c, target);
        ojson j;
        j["ok"] = ck.ok;
        if (ck.violation) {
            j["violation"] = ojson{
                {"input_block", pattern_json(ck.violation->input_block, c.input_alphabet)},
                {"position", ck.violation->position},
                {"forbidden", pattern_json(ck.violation->forbidden, target.alphabet)}};
        }
        return j;
    }

    ojson do_refine(const std::vector<std::string>& a) {
        SlidingBlockCode rc = partition_refine(code(a[0]), to_i(a[1]));
        return ojson{{"radius", rc.radius},
                     {"output_symbols", rc.output_alphabet.size()},
                     {"rule_entries", rc.rule.size()}};
    }

    ojson do_compose(const std::vector<std::string>& a) {
        SlidingBlockCode c = compose_codes(code(a[0]), code(a[1]), opt_.block_budget);
        return ojson{{"radius", c.radius},
                     {"default", c.output_alphabet.name_of(c.default_output)},
                     {"rule_entries", c.rule.size()}};
    }

    ojson do_encode(const std::vector<std::string>& a) {
        int n = to_i(a[1]);
        Pattern p = toeplitz_encode(top(a[0]), n);
        ojson bits = ojson::array();
        for (const auto& [cell, sym] : p.cells) bits.push_back(sym);
        return ojson{{"window_radius", n}, {"bits", bits}};
    }

    ojson do_decode(const std::vector<std::string>& a) {
        Pattern p = toeplitz_encode(top(a[0]), to_i(a[1]));
        std::vector<int> bits = toeplitz_decode(p, top(a[0]), to_i(a[2]));
        return ojson{{"omega_prefix", bits}};
    }

    ojson do_colorbases(const std::vector<std::string>& a) {
        ColoringStructure cs = coloring_structure(top(a[0]), to_i(a[1]));
        ojson steps = ojson::array();
        for (const ColoringStep& s : cs.steps)
            steps.push_back(ojson{{"base", s.base}, {"period", s.period}});
        return ojson{{"steps", steps},
                     {"uncolored", ojson{{"base", cs.uncolored_base},
                                         {"period", cs.uncolored_period}}}};
    }

    ojson do_orbit(const std::vector<std::string>& a) {
        Pattern p = toeplitz_encode(top(a[0]), to_i(a[1]));
        return language_json(orbit_language(p, to_i(a[2])));
    }

    ojson do_syndetic(const std::vector<std::string>& a) {
        Pattern p = toeplitz_encode(top(a[0]), to_i(a[1]));
        Pattern block;
        block.dim = 1;
        for (std::size_t i = 3; i < a.size(); ++i)
            block.cells[Cell{static_cast<int>(i - 3)}] = to_i(a[i]);
        return ojson{{"syndetic", syndetic_check(p, block, to_i(a[2]))}};
    }

    ojson do_perturb(const std::vector<std::string>& a) {
        PerturbationRequest req;
        req.w = sft(a[0]);
        req.code = code(a[1]);
        req.block_budget = opt_.block_budget;
        for (std::size_t i = 2; i < a.size(); ++i) {
            const std::string& kv = a[i];
            std::size_t eq = kv.find('=');
            std::string key = kv.substr(0, eq);
            int val = to_i(kv.substr(eq + 1));
            if (key == "keep") req.keep_resolution = val;
            if (key == "patmax") req.pattern_budget = val;
            if (key == "imgmax") req.image_budget = val;
        }
        PerturbationResult res = perturb_subsystem(req);
        ojson j;
        j["found"] = res.found.has_value();
        if (res.found) {
            const PerturbationFound& f = *res.found;
            j["added_forbidden"] = pattern_json(f.added_forbidden, req.w.alphabet);
            j["agreement_resolution"] = f.agreement_resolution;
            j["divergence_resolution"] = f.divergence_resolution;
            j["witness_block"] = pattern_json(f.witness_block, req.code.output_alphabet);
        } else {
            j["pattern_budget"] = res.pattern_budget;
            j["image_budget"] = res.image_budget;
        }
        return j;
    }

    ojson do_product(const std::vector<std::string>& a) {
        std::vector<Sft> factors;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) factors.push_back(sft(a[i]));
        int n = to_i(a.back());
        bool ok = product_projection_check(factors, n, opt_.block_budget);
        Sft prod = factors.front();
        std::vector<int> sizes{static_cast<int>(prod.alphabet.size())};
        for (std::size_t i = 1; i < factors.size(); ++i) {
            prod = product_sft(prod, factors[i]);
            sizes.push_back(static_cast<int>(factors[i].alphabet.size()));
        }
        BlockLanguage plang = admissible_blocks(prod, n, opt_.block_budget);
        ojson projected = ojson::array();
        for (std::size_t i = 0; i < factors.size(); ++i)
            projected.push_back(
                project_language(plang, sizes, i, factors[i].alphabet).blocks.size());
        return ojson{{"factors", factors.size()},
                     {"resolution", n},
                     {"ok", ok},
                     {"product_count", plang.blocks.size()},
                     {"projected_counts", projected}};
    }
};

}  // namespace

RunOutcome run_document(const Document& doc, const RunOptions& opt) {
    RunOutcome out;
    out.report = ojson::array();
    Exec exec(doc, opt);
    for (std::size_t i = 0; i < doc.commands.size(); ++i) {
        const Command& cmd = doc.commands[i];
        ojson entry;
        entry["command"] = cmd.op;
        entry["inputs"] = cmd.args;
        auto started = std::chrono::steady_clock::now();
        try {
            ojson result = exec.result(cmd, i);
            entry["status"] = "ok";
            entry["result"] = std::move(result);
        } catch (const std::exception& e) {
            entry["status"] = "error";
            entry["error"] = e.what();
            out.all_ok = false;
        }
        if (opt.timing) {
            auto elapsed = std::chrono::steady_clock::now() - started;
            entry["ms"] =
                std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed)
                    .count();
        }
        out.report.push_back(std::move(entry));
    }
    return out;
}

}  // namespace sftlab
