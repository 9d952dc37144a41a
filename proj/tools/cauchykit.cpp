// Command-line front end. Talks to the library only through cauchykit.h.
//
// Exit codes: 0 success or a true verdict, 1 a false verdict (not Cauchy,
// not a pair, not equivalent, failed identity), 2 bad input.

#include <cauchykit.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct Failure {
  std::string message;
  ck_status status = CK_ERR_INVALID_ARGUMENT;
};

struct DocDeleter {
  void operator()(ck_doc* d) const { ck_doc_free(d); }
};
using Doc = std::unique_ptr<ck_doc, DocDeleter>;

struct FrameDeleter {
  void operator()(ck_frame* f) const { ck_frame_free(f); }
};
using FramePtr = std::unique_ptr<ck_frame, FrameDeleter>;

void check(ck_status s, const std::string& context) {
  if (s == CK_OK) return;
  std::string msg = context.empty() ? "" : context + ": ";
  throw Failure{msg + ck_last_error() + " (" + ck_status_name(s) + ")", s};
}

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Doc load(const std::string& path) {
  ck_doc* d = nullptr;
  check(ck_doc_parse(slurp(path).c_str(), &d), path == "-" ? "<stdin>" : path);
  return Doc(d);
}

std::string take(char* s) {
  std::string out(s);
  ck_string_free(s);
  return out;
}

std::string json_of(const ck_doc* d) {
  char* s = nullptr;
  check(ck_doc_to_json(d, &s), "");
  return take(s);
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{"cannot write " + path};
    out << text;
  }
};

// Runs an operation returning a document.
template <class Fn>
int emit_doc(const Output& out, Fn&& fn) {
  ck_doc* d = nullptr;
  check(fn(&d), "");
  Doc owned(d);
  out.write(json_of(owned.get()));
  return kTrue;
}

// Runs an operation returning a verdict and a JSON report.
template <class Fn>
int emit_verdict(const Output& out, Fn&& fn) {
  int verdict = 0;
  char* s = nullptr;
  check(fn(&verdict, &s), "");
  out.write(take(s));
  return verdict ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Cauchy matrices and Cauchy pairs over Q and GF(p)"};
  app.require_subcommand(1);
  Output out;
  std::function<int()> action;

  auto input_cmd = [&](const char* name, const char* help, std::string& path) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", path, "input document, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--out", out.path, "write the result here instead of stdout");
    return sub;
  };

  // gen
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_field = "Q";
  auto* gen = app.add_subcommand("gen", "random Cauchy data from the seeded LCG");
  gen->add_option("-n,--size", gen_n, "number of x (and x_tilde) scalars")->required();
  gen->add_option("--seed", gen_seed, "LCG seed")->capture_default_str();
  gen->add_option("--field", gen_field, "Q or GF(p)")->capture_default_str();
  gen->add_option("-o,--out", out.path, "write the result here instead of stdout");
  gen->callback([&] {
    action = [&] { return emit_doc(out, [&](ck_doc** d) { return ck_generate(gen_n, gen_seed, gen_field.c_str(), d); }); };
  });

  std::string in = "-";

  auto* build = input_cmd("build", "explicit Cauchy matrix from data", in);
  build->callback([&] {
    action = [&] { Doc d = load(in); return emit_doc(out, [&](ck_doc** m) { return ck_build(d.get(), m); }); };
  });

  bool oracle = false;
  auto* invert = input_cmd("invert", "inverse from data (or of a matrix with --oracle)", in);
  invert->add_flag("--oracle", oracle, "invert a matrix document by exact elimination");
  invert->callback([&] {
    action = [&] {
      Doc d = load(in);
      if (oracle) return emit_doc(out, [&](ck_doc** m) { return ck_oracle_inverse(d.get(), m); });
      return emit_doc(out, [&](ck_doc** m) { return ck_invert(d.get(), m); });
    };
  });

  std::string rhs_path;
  auto* solve = input_cmd("solve", "solve C y = b from data; b is an n x k matrix", in);
  solve->add_option("--rhs", rhs_path, "right-hand side matrix document")->required();
  solve->callback([&] {
    action = [&] {
      Doc d = load(in);
      Doc b = load(rhs_path);
      return emit_doc(out, [&](ck_doc** y) { return ck_solve(d.get(), b.get(), y); });
    };
  });

  auto* alphas = input_cmd("alphas", "the scalings alpha and alpha_tilde of data", in);
  alphas->callback([&] {
    action = [&] {
      Doc d = load(in);
      char* s = nullptr;
      check(ck_alphas(d.get(), &s), "");
      out.write(take(s));
      return kTrue;
    };
  });

  auto* recognize = input_cmd("recognize", "decide whether a matrix is Cauchy and recover data", in);
  recognize->callback([&] {
    action = [&] {
      Doc m = load(in);
      return emit_verdict(out, [&](int* v, char** s) { return ck_recognize(m.get(), v, s); });
    };
  });

  auto* identities = input_cmd("identities", "check the exact identities on data", in);
  identities->callback([&] {
    action = [&] {
      Doc d = load(in);
      return emit_verdict(out, [&](int* v, char** s) { return ck_identities(d.get(), v, s); });
    };
  });

  auto* verify = input_cmd("verify-pair", "decide whether a pair document is a Cauchy pair", in);
  verify->callback([&] {
    action = [&] {
      Doc p = load(in);
      return emit_verdict(out, [&](int* v, char** s) { return ck_pair_verify(p.get(), v, s); });
    };
  });

  auto* from_data = input_cmd("pair-from-data", "Cauchy pair with the given eigenvalue data", in);
  from_data->callback([&] {
    action = [&] { Doc d = load(in); return emit_doc(out, [&](ck_doc** p) { return ck_pair_from_data(d.get(), p); }); };
  });

  auto* eigen = input_cmd("eigenvalue-data", "eigenvalue data of a Cauchy pair", in);
  eigen->callback([&] {
    action = [&] {
      Doc p = load(in);
      return emit_doc(out, [&](ck_doc** d) { return ck_pair_eigenvalue_data(p.get(), d); });
    };
  });

  std::string first, second;
  auto* equiv = app.add_subcommand("equiv", "equivalence of two pairs (or of two data up to shift)");
  equiv->add_option("first", first, "first document")->required();
  equiv->add_option("second", second, "second document")->required();
  equiv->add_option("-o,--out", out.path, "write the result here instead of stdout");
  equiv->callback([&] {
    action = [&] {
      Doc p = load(first);
      Doc q = load(second);
      if (std::string(ck_doc_kind(p.get())) == "cauchy_data")
        return emit_verdict(out, [&](int* v, char** s) { return ck_perm_equivalent(p.get(), q.get(), v, s); });
      return emit_verdict(out, [&](int* v, char** s) { return ck_pair_equivalent(p.get(), q.get(), v, s); });
    };
  });

  std::vector<std::string> pair_paths;
  auto* classify = app.add_subcommand("classify", "group pair documents into equivalence classes");
  classify->add_option("pairs", pair_paths, "pair documents")->required();
  classify->add_option("-o,--out", out.path, "write the result here instead of stdout");
  classify->callback([&] {
    action = [&] {
      std::vector<Doc> docs;
      std::vector<const ck_doc*> raw;
      for (const auto& path : pair_paths) {
        docs.push_back(load(path));
        raw.push_back(docs.back().get());
      }
      char* s = nullptr;
      check(ck_pairs_classify(raw.data(), raw.size(), &s), "");
      out.write(take(s));
      return kTrue;
    };
  });

  std::string gamma = "1", rho = "1", from = "eps", to = "eps-tilde";
  auto frame_cmd = [&](const char* name, const char* help, const char* from_flag, const char* to_flag) {
    auto* sub = input_cmd(name, help, in);
    sub->add_option("--gamma", gamma, "index gamma (nonzero)")->capture_default_str();
    sub->add_option("--rho", rho, "form scale rho (nonzero)")->capture_default_str();
    sub->add_option(from_flag, from, "eps, eps-tilde, eps-star or eps-tilde-star")->capture_default_str();
    sub->add_option(to_flag, to, "eps, eps-tilde, eps-star or eps-tilde-star")->capture_default_str();
    return sub;
  };
  auto with_frame = [&](auto&& fn) {
    Doc d = load(in);
    ck_frame* f = nullptr;
    check(ck_frame_new(d.get(), gamma.c_str(), rho.c_str(), &f), "frame");
    FramePtr owned(f);
    return emit_doc(out, [&](ck_doc** m) { return fn(owned.get(), m); });
  };

  auto* transition = frame_cmd("transition", "transition matrix between two standard bases", "--from", "--to");
  transition->callback([&] {
    action = [&] {
      return with_frame([&](ck_frame* f, ck_doc** m) { return ck_frame_transition(f, from.c_str(), to.c_str(), m); });
    };
  });

  auto* gram = frame_cmd("gram", "Gram matrix of the invariant form between two bases", "--left", "--right");
  gram->callback([&] {
    action = [&] {
      return with_frame([&](ck_frame* f, ck_doc** m) { return ck_frame_gram(f, from.c_str(), to.c_str(), m); });
    };
  });

  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "structured solve against the dense oracle, CSV");
  bench->add_option("--sizes", sizes, "matrix sizes, comma separated")->required()->delimiter(',');
  bench->add_option("--trials", trials, "runs per size")->capture_default_str();
  bench->add_option("--seed", bench_seed, "seed of the first trial")->capture_default_str();
  bench->add_option("-o,--out", out.path, "write the CSV here instead of stdout");
  bench->callback([&] {
    action = [&] {
      char* s = nullptr;
      check(ck_bench(sizes.data(), sizes.size(), trials, bench_seed, &s), "bench");
      out.write(take(s));
      return kTrue;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kTrue : kInputError;
  }
  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "cauchykit: " << f.message << "\n";
    // Asking for the eigenvalue data of something that is not a Cauchy pair
    // is a negative verdict, not malformed input.
    return f.status == CK_ERR_NOT_VERIFIED ? kFalse : kInputError;
  }
}
