#pragma once

// Command-line front end. JSON goes to `out`, diagnostics to `err`.
// Exit codes: 0 success or equivalent, 1 not equivalent / law violated,
// 2 parse error, 3 invalid input or range.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "longray.hpp"

namespace longray::cli {

enum ExitCode : int { kOk = 0, kDiffers = 1, kParseFailure = 2, kInvalid = 3 };

namespace detail {

inline std::string text_set(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    out += (first ? "x" : ",x") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// {x1}, {x2,x3}
inline std::string text_antichain(const Antichain& a) {
  if (a.empty()) return "none (bounded)";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + text_set(a.elements()[i]);
  return out;
}

inline std::string text_antichain(const SignedAntichain& a) {
  if (a.empty()) return "none (bounded)";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += i ? ", {" : "{";
    const auto atoms = a.elements()[i].atoms();
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      out += (j ? "," : "") + std::string(atoms[j] > 0 ? "+x" : "-x") + std::to_string(atoms[j] > 0 ? atoms[j] : -atoms[j]);
    }
    out += "}";
  }
  return out;
}

inline std::string text_matrix(const DirectionMatrix& d) {
  std::string out;
  for (auto row : d.index_order()) {
    const auto t = d.target(row);
    out += text_set(row) + " -> " + (t ? text_set(*t) : std::string("0")) + "\n";
  }
  return out;
}

struct Options {
  int n = 0;
  std::string format = "json";
  std::string domain = "ray";
  std::vector<std::string> positional;
};

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int classify(const Options& o) {
    const std::string& text = o.positional.at(0);
    if (o.domain == "line") {
      check_dimension(o.n, kMaxSignedListDimension);
      const auto term = parse_term(text, o.n, Domain::LongLine);
      const auto cls = signed_homotopy_class(term, o.n);
      const auto rep = print_term(signed_canonical_representative(cls));
      if (json(o)) {
        Json j;
        j["n"] = o.n;
        j["domain"] = "line";
        j["antichain"] = to_json(cls);
        j["representative"] = rep;
        emit(j);
      } else {
        out_ << "class: " << text_antichain(cls) << "\nrepresentative: " << rep << "\n";
      }
      return kOk;
    }
    check_dimension(o.n);
    const auto term = parse_term(text, o.n);
    const auto cls = homotopy_class(term, o.n);
    const auto rep = print_term(canonical_representative(cls));
    if (json(o)) {
      Json j;
      j["n"] = o.n;
      j["antichain"] = to_json(cls);
      j["representative"] = rep;
      emit(j);
    } else {
      out_ << "class: " << text_antichain(cls) << "\nrepresentative: " << rep << "\n";
    }
    return kOk;
  }

  int equiv(const Options& o) {
    check_dimension(o.n);
    const auto f = homotopy_class(parse_term(o.positional.at(0), o.n), o.n);
    const auto g = homotopy_class(parse_term(o.positional.at(1), o.n), o.n);
    const bool same = f == g;
    if (json(o)) {
      Json j;
      j["equivalent"] = same;
      j["f"] = to_json(f);
      j["g"] = to_json(g);
      emit(j);
    } else if (same) {
      out_ << "equivalent\n";
    } else {
      out_ << "not equivalent\nf: " << text_antichain(f) << "\ng: " << text_antichain(g) << "\n";
    }
    return same ? kOk : kDiffers;
  }

  int count(const Options& o) {
    const std::string& target = o.positional.at(0);
    Json j;
    j["target"] = target;
    std::uint64_t value = 0;
    if (target == "pipe") {
      if (o.positional.size() < 2) throw InvalidInput("count pipe needs a U/D code");
      const auto code = PipeCode::parse(o.positional[1]);
      value = count_pipe_classes(code);
      j["code"] = to_string(code);
    } else {
      if (o.positional.size() > 1) throw InvalidInput("unexpected argument '" + o.positional[1] + "'");
      if (target == "rn-to-r") {
        value = count_antichains(o.n);
      } else if (target == "ln-to-r") {
        value = count_classes_Ln_to_R(o.n);
      } else if (target == "rn-to-l") {
        value = count_classes_Rn_to_L(o.n);
      } else {
        throw InvalidInput("unknown count target '" + target + "' (rn-to-r, ln-to-r, rn-to-l, pipe)");
      }
      j["n"] = o.n;
    }
    j["count"] = value;
    if (json(o)) {
      emit(j);
    } else {
      out_ << value << "\n";
    }
    return kOk;
  }

  int dmatrix(const Options& o) {
    check_dimension(o.n, kMaxMatrixDimension);
    const auto d = direction_matrix(parse_vector_term(o.positional.at(0), o.n), o.n);
    if (json(o)) {
      emit(to_json(d));
    } else {
      out_ << text_matrix(d);
    }
    return kOk;
  }

  int monoid_check(const Options& o) {
    check_dimension(o.n, kMaxMatrixDimension);
    const auto f = parse_vector_term(o.positional.at(0), o.n);
    const auto g = parse_vector_term(o.positional.at(1), o.n);
    const auto composite = direction_matrix(compose(f, g), o.n);
    const auto product = bool_mat_mul(direction_matrix(g, o.n), direction_matrix(f, o.n));
    const bool equal = composite == product;
    if (json(o)) {
      Json j;
      j["equal"] = equal;
      j["composite"] = to_json(composite);
      j["product"] = to_json(product);
      emit(j);
    } else {
      out_ << "D(f o g):\n" << text_matrix(composite) << "D(g) D(f):\n" << text_matrix(product)
           << (equal ? "equal\n" : "NOT equal\n");
    }
    return equal ? kOk : kDiffers;
  }

  int pipe_order(const Options& o) {
    const auto code = PipeCode::parse(o.positional.at(0));
    if (json(o)) {
      emit(pipe_json(code));
    } else {
      const auto p = pipe_preorder(code);
      out_ << "k=" << code.length() << "\n";
      for (auto [i, j] : p.pairs()) out_ << i << " < " << j << "\n";
      out_ << "classes=" << count_pipe_classes(code) << "\n";
    }
    return kOk;
  }

  int pipe_equiv(const Options& o) {
    const auto a = PipeCode::parse(o.positional.at(0));
    const auto b = PipeCode::parse(o.positional.at(1));
    const bool same = code_equivalent(a, b);
    if (json(o)) {
      Json j;
      j["equivalent"] = same;
      j["codes"] = Json::array({to_string(a), to_string(b)});
      emit(j);
    } else {
      out_ << (same ? "equivalent\n" : "not equivalent\n");
    }
    return same ? kOk : kDiffers;
  }

 private:
  static bool json(const Options& o) { return o.format == "json"; }
  void emit(const Json& j) { out_ << j.dump() << "\n"; }

  std::ostream& out_;
};

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy classes of maps between long-ray manifolds", "longray"};
  app.require_subcommand(1);

  detail::Options o;
  int (detail::Runner::*action)(const detail::Options&) = nullptr;

  const auto add = [&](const std::string& name, const std::string& description, bool needs_n,
                       std::vector<std::string> positional_names,
                       int (detail::Runner::*fn)(const detail::Options&)) {
    auto* sub = app.add_subcommand(name, description);
    if (needs_n) sub->add_option("--n", o.n, "Dimension")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("args", o.positional, "Arguments: " + CLI::detail::join(positional_names, " "))
        ->expected(static_cast<int>(positional_names.size()));
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* classify = add("classify", "Homotopy class of a map R^n -> R (or L^n -> R)", true, {"TERM"},
                       &detail::Runner::classify);
  classify->add_option("--domain", o.domain, "ray: R^n (atoms x<i>); line: L^n (atoms p<i>, n<i>)")
      ->check(CLI::IsMember({"ray", "line"}));
  add("equiv", "Decide whether two maps R^n -> R are homotopic", true, {"F", "G"}, &detail::Runner::equiv);
  auto* count = app.add_subcommand("count", "Count homotopy classes");
  count->add_option("--n", o.n, "Dimension");
  count->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  count->add_option("args", o.positional, "TARGET [CODE]; TARGET in rn-to-r, ln-to-r, rn-to-l, pipe")
      ->required()
      ->expected(1, 2);
  count->callback([&action] { action = &detail::Runner::count; });
  add("dmatrix", "Direction matrix of a self-map of R^n, components separated by ';'", true, {"VECTOR"},
      &detail::Runner::dmatrix);
  add("monoid-check", "Compare D(f o g) with D(g) D(f)", true, {"F", "G"}, &detail::Runner::monoid_check);
  add("pipe-order", "Cofinality order and class count of a pipe code", false, {"CODE"},
      &detail::Runner::pipe_order);
  add("pipe-equiv", "Whether two pipe codes describe homeomorphic pipes", false, {"S", "T"},
      &detail::Runner::pipe_equiv);

  std::vector<std::string> argv_storage{"longray"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  detail::Runner runner(out);
  try {
    return (runner.*action)(o);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace longray::cli
