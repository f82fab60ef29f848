#ifndef SEMIPART_TOOLS_CLI_APP_HPP
#define SEMIPART_TOOLS_CLI_APP_HPP

// Command dispatch for the semipart binary. Kept in a header so the tests can
// drive the exact same code path in-process.

#include <iostream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semipart/expr.hpp"
#include "semipart/verify.hpp"

namespace semipart::cli {

enum class Format { Text, Records, Json };

struct RunConfig {
  VerifyConfig verify;
  Format format = Format::Text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// One output fact: a text line, a record line, and a JSON object.
struct Fact {
  std::string text;
  std::string record;
  nlohmann::json json;
};

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void emit(Fact f) {
    switch (format_) {
      case Format::Text: out_ << f.text << '\n'; break;
      case Format::Records: out_ << f.record << '\n'; break;
      case Format::Json: items_.push_back(std::move(f.json)); break;
    }
  }

  void finish() {
    if (format_ == Format::Json) out_ << items_.dump(2) << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
  nlohmann::json items_ = nlohmann::json::array();
};

namespace detail {

/// Positional inputs, or one per non-blank stdin line when none were given.
inline std::vector<std::string> inputs_or_stdin(const std::vector<std::string>& args, std::istream& in) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  return lines;
}

inline nlohmann::json label_json(const Label& l) {
  nlohmann::json j{{"tag", tag_name(l.tag)}};
  if (l.tag != Label::Tag::Zero) {
    j["alpha"] = l.alpha;
    j["k"] = l.k;
  }
  return j;
}

inline std::string label_fields(const Label& l) {
  if (l.tag == Label::Tag::Zero) return "Zero - -";
  return std::string(tag_name(l.tag)) + ' ' + std::to_string(l.alpha) + ' ' + std::to_string(l.k);
}

inline Fact label_fact(const std::string& kind, const std::string& input, const Label& l) {
  return {describe(l), kind + ' ' + quote(input) + ' ' + label_fields(l),
          {{"input", input}, {"label", label_json(l)}}};
}

inline Fact union_fact(const std::string& kind, const IntervalUnion& u) {
  return {u.to_string(), kind + ' ' + quote(u.to_string()), {{kind, u.to_string()}}};
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Parses argv and runs one command. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact semigroup partitions, interval sumsets, multiplicative pieces and subgroup covers",
               "semipart"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  SampleConfig& sc = cfg.verify.sample;
  std::string format = "text";
  app.add_option("--seed", sc.seed, "Seed for randomized runs");
  app.add_option("--count", sc.count, "Samples per randomized check");
  app.add_option("--max-index", sc.max_index, "Largest piece index in random reals");
  app.add_option("--max-terms", sc.max_terms, "Most terms in a random real");
  app.add_option("--max-point-len", sc.max_point_len, "Longest Cantor point string");
  app.add_option("--coeff-bound", sc.coeff_bound, "Numerator and denominator bound");
  app.add_option("--group-bound", cfg.verify.group_bound, "Largest group order accepted");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records", "json"}));

  std::vector<std::string> args;
  std::string kappa_text = "all";
  std::string module = "all";
  std::uint64_t n = 0;
  std::function<int(Emitter&)> action;

  auto exprs = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("inputs", args, what + " (read from stdin, one per line, when omitted)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Label of a symbolic real");
  exprs(classify_cmd, "Symbolic reals");
  classify_cmd->callback([&] {
    action = [&](Emitter& e) {
      for (const auto& s : detail::inputs_or_stdin(args, in)) e.emit(detail::label_fact("label", s, classify(parse_real(s))));
      return kExitOk;
    };
  });

  auto* split_cmd = app.add_subcommand("split", "Split x into the part below its top piece and the top part");
  exprs(split_cmd, "Symbolic reals");
  split_cmd->callback([&] {
    action = [&](Emitter& e) {
      for (const auto& s : detail::inputs_or_stdin(args, in)) {
        const Split sp = split_below_top(parse_real(s));
        const std::string lo = to_string(sp.lower);
        const std::string top = to_string(sp.top);
        e.emit({"lower: " + lo + "\ntop: " + top, "split " + quote(s) + ' ' + quote(lo) + ' ' + quote(top),
                {{"input", s}, {"lower", lo}, {"top", top}}});
      }
      return kExitOk;
    };
  });

  auto* prop_cmd = app.add_subcommand("prop11", "Piece of a real in the first-coordinate partition");
  prop_cmd->add_option("--kappa", kappa_text, "Number of pieces, or all")->capture_default_str();
  exprs(prop_cmd, "Symbolic reals");
  prop_cmd->callback([&] {
    action = [&](Emitter& e) {
      const Kappa kappa = parse_kappa(kappa_text);
      for (const auto& s : detail::inputs_or_stdin(args, in)) {
        const PropLabel l = classify_prop11(parse_real(s), kappa);
        const std::string alpha = l.tag == PropLabel::Tag::Piece ? std::to_string(l.alpha) : "-";
        e.emit({to_string(l), "piece " + quote(s) + ' ' + kappa.to_string() + ' ' + alpha,
                {{"input", s}, {"kappa", kappa.to_string()}, {"piece", to_string(l)}}});
      }
      return kExitOk;
    };
  });

  auto* ray_cmd = app.add_subcommand("ray", "Whether y is a positive rational multiple of x");
  ray_cmd->add_option("x", args, "Two symbolic reals")->allow_extra_args(false)->expected(2)->required();
  ray_cmd->callback([&] {
    action = [&](Emitter& e) {
      const bool same = same_ray(parse_real(args[0]), parse_real(args[1]));
      e.emit({detail::yes_no(same), "ray " + quote(args[0]) + ' ' + quote(args[1]) + ' ' + detail::yes_no(same),
              {{"x", args[0]}, {"y", args[1]}, {"same_ray", same}}});
      return kExitOk;
    };
  });

  auto* sum_cmd = app.add_subcommand("sumset", "Minkowski sum A + B of two interval unions");
  sum_cmd->add_option("sets", args, "Two interval unions")->allow_extra_args(false)->expected(2)->required();
  sum_cmd->callback([&] {
    action = [&](Emitter& e) {
      e.emit(detail::union_fact("sum", minkowski_sum(parse_interval_union(args[0]), parse_interval_union(args[1]))));
      return kExitOk;
    };
  });

  auto* nfold_cmd = app.add_subcommand("nfold", "n-fold sum A + ... + A");
  nfold_cmd->add_option("n", n, "Number of summands")->required()->check(CLI::PositiveNumber);
  nfold_cmd->add_option("set", args, "Interval union")->allow_extra_args(false)->expected(1)->required();
  nfold_cmd->callback([&] {
    action = [&](Emitter& e) {
      e.emit(detail::union_fact("nfold", n_fold(parse_interval_union(args[0]), n)));
      return kExitOk;
    };
  });

  auto* half_cmd = app.add_subcommand("halfline", "Threshold t of the halfline inside the even sums of A");
  half_cmd->add_option("set", args, "Interval union inside [0,inf)")->allow_extra_args(false)->expected(1)->required();
  half_cmd->callback([&] {
    action = [&](Emitter& e) {
      const HalflineResult h = even_sum_halfline(parse_interval_union(args[0]));
      const std::string t = to_string(h.t);
      const std::string via = Interval::open(h.a, h.b).to_string();
      e.emit({"t=" + t + " certified=" + detail::yes_no(h.certified) + " via " + via + " terms=" + std::to_string(h.terms),
              "halfline " + quote(args[0]) + ' ' + t + ' ' + detail::yes_no(h.certified) + ' ' + quote(via) + ' ' +
                  std::to_string(h.terms),
              {{"set", args[0]}, {"t", t}, {"certified", h.certified}, {"interval", via}, {"terms", h.terms}}});
      return kExitOk;
    };
  });

  auto* closed_cmd = app.add_subcommand("closed", "Whether A + A and A + A + A lie inside A");
  closed_cmd->add_option("set", args, "Interval union")->allow_extra_args(false)->expected(1)->required();
  closed_cmd->callback([&] {
    action = [&](Emitter& e) {
      const IntervalUnion a = parse_interval_union(args[0]);
      const bool two = is_additively_closed(a);
      const bool three = is_triple_closed(a);
      e.emit({"A+A in A: " + detail::yes_no(two) + "\nA+A+A in A: " + detail::yes_no(three),
              "closed " + quote(a.to_string()) + ' ' + detail::yes_no(two) + ' ' + detail::yes_no(three),
              {{"set", a.to_string()}, {"closed2", two}, {"closed3", three}}});
      return kExitOk;
    };
  });

  auto* cantor_cmd = app.add_subcommand("cantor-sum", "C_n + C_n for the stage-n Cantor approximant");
  cantor_cmd->add_option("n", n, "Stage")->required()->check(CLI::Range(0, 20));
  cantor_cmd->callback([&] {
    action = [&](Emitter& e) {
      const IntervalUnion c = cantor_stage(static_cast<unsigned>(n));
      e.emit(detail::union_fact("cantor-sum", minkowski_sum(c, c)));
      return kExitOk;
    };
  });

  auto* atoms_cmd = app.add_subcommand("atoms", "Product of two piece sets; the full atom table when none are given");
  atoms_cmd->add_option("sets", args, "Two piece sets")->expected(0, 2);
  atoms_cmd->callback([&] {
    action = [&](Emitter& e) {
      auto product_fact = [](const std::string& s, const std::string& t, PieceSet p) {
        return Fact{s + " * " + t + " = " + to_string(p), "product " + quote(s) + ' ' + quote(t) + ' ' + quote(to_string(p)),
                    {{"x", s}, {"y", t}, {"product", to_string(p)}}};
      };
      if (args.empty()) {
        for (Atom a : kAtoms)
          for (Atom b : kAtoms)
            e.emit(product_fact(std::string(atom_name(a)), std::string(atom_name(b)), atom_product(a, b)));
        return kExitOk;
      }
      if (args.size() != 2) throw CLI::ValidationError("atoms", "expects zero or two piece sets");
      e.emit(product_fact(args[0], args[1], product_set(parse_piece_set(args[0]), parse_piece_set(args[1]))));
      return kExitOk;
    };
  });

  auto* enum_cmd = app.add_subcommand("enum10", "The multiplicatively closed unions of I1, I2, P, Z");
  enum_cmd->callback([&] {
    action = [&](Emitter& e) {
      for (unsigned mask : closed_generator_masks()) {
        const PieceSet s = generator_union(mask);
        const std::string name = generator_union_name(mask);
        const std::string line = as_interval_union(s).to_string();
        e.emit({name + ": " + line, "closed-union " + quote(name) + ' ' + quote(to_string(s)) + ' ' + quote(line),
                {{"name", name}, {"atoms", to_string(s)}, {"set", line}}});
      }
      return kExitOk;
    };
  });

  auto* mult_cmd = app.add_subcommand("multclassify", "Multiplicative piece of e^x, given the exponent x");
  exprs(mult_cmd, "Exponents as symbolic reals");
  mult_cmd->callback([&] {
    action = [&](Emitter& e) {
      for (const auto& s : detail::inputs_or_stdin(args, in))
        e.emit(detail::label_fact("mult-label", s, mult_classify(PosRealExp{parse_real(s)})));
      return kExitOk;
    };
  });

  auto* sub_cmd = app.add_subcommand("subgroups", "All subgroups of a finite abelian group");
  sub_cmd->add_option("group", args, "Group such as Z2xZ2")->allow_extra_args(false)->expected(1)->required();
  sub_cmd->callback([&] {
    action = [&](Emitter& e) {
      const FiniteGroup g = parse_group(args[0], cfg.verify.group_bound);
      for (const auto& h : subgroups(g))
        e.emit({"order " + std::to_string(h.order()) + ": " + h.to_string(),
                "subgroup " + g.to_string() + ' ' + std::to_string(h.order()) + ' ' + quote(h.to_string()),
                {{"group", g.to_string()}, {"order", h.order()}, {"generators", h.to_string()}}});
      return kExitOk;
    };
  });

  auto cover_json = [](const SubgroupCover& c) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& h : c.members) members.push_back(h.to_string());
    return nlohmann::json{{"kappa", c.kappa()}, {"lambda", c.lambda()}, {"members", members}};
  };

  auto* covers_cmd = app.add_subcommand("covers", "Covers by proper subgroups meeting pairwise in the identity");
  covers_cmd->add_option("group", args, "Group such as Z2xZ2")->allow_extra_args(false)->expected(1)->required();
  covers_cmd->callback([&] {
    action = [&](Emitter& e) {
      const FiniteGroup g = parse_group(args[0], cfg.verify.group_bound);
      for (const auto& c : find_covers(g)) {
        const std::string head = "kappa=" + std::to_string(c.kappa()) + " lambda=" + std::to_string(c.lambda());
        e.emit({head + ": " + c.to_string(),
                "cover " + g.to_string() + ' ' + std::to_string(c.kappa()) + ' ' + std::to_string(c.lambda()) + ' ' +
                    quote(c.to_string()),
                cover_json(c)});
      }
      return kExitOk;
    };
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "Check the counting inequalities on every cover of a group");
  bounds_cmd->add_option("group", args, "Group such as Z2xZ2")->allow_extra_args(false)->expected(1)->required();
  bounds_cmd->callback([&] {
    action = [&](Emitter& e) {
      const FiniteGroup g = parse_group(args[0], cfg.verify.group_bound);
      int status = kExitOk;
      for (const auto& c : find_covers(g)) {
        const BoundReport r = verify_cover_bounds(g, c);
        if (!r.ok()) status = kExitFailed;
        std::string text = c.to_string() + "\n  coset meets <= 1: " + detail::yes_no(r.coset_meets_at_most_one) +
                           " (max " + std::to_string(r.max_coset_meet) + " over " + std::to_string(r.coset_checks) +
                           " checks)\n  kappa >= |H|: " + detail::yes_no(r.kappa_at_least_member_order) +
                           "\n  kappa*lambda >= |G|: " + detail::yes_no(r.kappa_lambda_at_least_order) + " (" +
                           std::to_string(r.kappa) + "*" + std::to_string(r.lambda) + " vs " +
                           std::to_string(r.order) + ")";
        if (!r.coset_witness.empty()) text += "\n  witness: " + r.coset_witness;
        for (const auto& v : r.violations) text += "\n  violation: " + v;
        nlohmann::json j = cover_json(c);
        j["coset_meets_at_most_one"] = r.coset_meets_at_most_one;
        j["kappa_at_least_member_order"] = r.kappa_at_least_member_order;
        j["kappa_lambda_at_least_order"] = r.kappa_lambda_at_least_order;
        j["witness"] = r.coset_witness;
        j["violations"] = r.violations;
        e.emit({text,
                "bounds " + g.to_string() + ' ' + quote(c.to_string()) + ' ' + detail::yes_no(r.coset_meets_at_most_one) +
                    ' ' + detail::yes_no(r.kappa_at_least_member_order) + ' ' +
                    detail::yes_no(r.kappa_lambda_at_least_order),
                std::move(j)});
      }
      return status;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suite of a module, or all");
  verify_cmd->add_option("module", module, "Module name or all")
      ->capture_default_str()
      ->check(CLI::IsMember([] {
        auto names = verify_modules();
        names.push_back("all");
        return names;
      }()));
  verify_cmd->callback([&] {
    action = [&](Emitter& e) {
      cfg.verify.sample.validate();
      std::vector<std::string> names{module};
      if (module == "all") names = verify_modules();
      int status = kExitOk;
      for (const auto& name : names) {
        const CheckReport r = verify_module(name, cfg.verify);
        if (!r.ok()) status = kExitFailed;
        std::uint64_t total = 0;
        for (const auto& [check, count] : r.checks) total += count;
        std::ostringstream records;
        write_records(records, r);
        std::string rec = records.str();
        if (!rec.empty() && rec.back() == '\n') rec.pop_back();
        std::string text = name + ": " + (r.ok() ? "ok" : "FAILED") + " (" + std::to_string(total) + " checks, " +
                           std::to_string(r.violations.size()) + " violations)";
        for (const auto& v : r.violations)
          text += "\n  " + v.kind + ": x=" + v.x + " y=" + v.y + " expected " + v.expected + ", got " + v.got;
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : r.violations)
          violations.push_back({{"kind", v.kind}, {"x", v.x}, {"y", v.y}, {"expected", v.expected}, {"got", v.got}});
        e.emit({text, rec, {{"module", name}, {"ok", r.ok()}, {"checks", r.checks}, {"violations", violations}}});
      }
      return status;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (format == "records")
    cfg.format = Format::Records;
  else if (format == "json")
    cfg.format = Format::Json;

  Emitter emitter(out, cfg.format);
  try {
    const int status = action(emitter);
    emitter.finish();
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace semipart::cli

#endif
