#include "cauchykit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cauchykit/bench.hpp"
#include "cauchykit/document.hpp"
#include "cauchykit/rng.hpp"

using namespace cauchykit;

struct ck_doc {
  DocumentValue value;
};

struct ck_frame {
  Frame frame;
};

namespace {

thread_local std::string last_error;

ck_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return CK_ERR_DIVISION_BY_ZERO;
    case ErrorCode::FieldMismatch: return CK_ERR_FIELD_MISMATCH;
    case ErrorCode::InvalidData: return CK_ERR_INVALID_DATA;
    case ErrorCode::DimensionMismatch: return CK_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotVerified: return CK_ERR_NOT_VERIFIED;
    case ErrorCode::Parse: return CK_ERR_PARSE;
    case ErrorCode::InvalidArgument: return CK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Singular: return CK_ERR_SINGULAR;
  }
  return CK_ERR_INTERNAL;
}

template <class Fn>
ck_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return CK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return CK_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (p == nullptr) raise(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

template <class T>
const T& expect(const ck_doc* doc, const char* kind) {
  need(doc, "document");
  if (const T* v = std::get_if<T>(&doc->value)) return *v;
  raise(ErrorCode::InvalidArgument,
        std::string("expected a ") + kind + " document, got " + document_kind(doc->value));
}

const CauchyData& data_of(const ck_doc* d) { return expect<CauchyData>(d, "cauchy_data"); }
const DenseMatrix& matrix_of(const ck_doc* d) { return expect<DenseMatrix>(d, "matrix"); }
const CauchyPair& pair_of(const ck_doc* d) { return expect<CauchyPair>(d, "pair"); }

void emit(ck_doc** out, DocumentValue value) {
  need(out, "output handle");
  *out = new ck_doc{std::move(value)};
}

void emit(char** out, const std::string& text) {
  need(out, "output string");
  char* s = static_cast<char*>(std::malloc(text.size() + 1));
  if (s == nullptr) throw std::bad_alloc();
  std::memcpy(s, text.c_str(), text.size() + 1);
  *out = s;
}

void flag(int* out, bool value) {
  if (out != nullptr) *out = value ? 1 : 0;
}

std::string text_of(const char* s, const char* what) {
  need(s, what);
  return s;
}

}  // namespace

extern "C" {

const char* ck_last_error(void) { return last_error.c_str(); }

const char* ck_status_name(ck_status status) {
  switch (status) {
    case CK_OK: return "ok";
    case CK_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case CK_ERR_FIELD_MISMATCH: return "field_mismatch";
    case CK_ERR_INVALID_DATA: return "invalid_data";
    case CK_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case CK_ERR_NOT_VERIFIED: return "not_verified";
    case CK_ERR_PARSE: return "parse";
    case CK_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CK_ERR_SINGULAR: return "singular";
    case CK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void ck_string_free(char* s) { std::free(s); }

ck_status ck_doc_parse(const char* json, ck_doc** out) {
  return guarded([&] { emit(out, parse_document(text_of(json, "document text"))); });
}

void ck_doc_free(ck_doc* doc) { delete doc; }

const char* ck_doc_kind(const ck_doc* doc) { return doc == nullptr ? "" : document_kind(doc->value); }

ck_status ck_doc_to_json(const ck_doc* doc, char** out) {
  return guarded([&] {
    need(doc, "document");
    emit(out, to_json(doc->value));
  });
}

ck_status ck_generate(size_t n, uint64_t seed, const char* field, ck_doc** out) {
  return guarded([&] { emit(out, generate_data(n, seed, Field::parse(text_of(field, "field")))); });
}

ck_status ck_build(const ck_doc* data, ck_doc** matrix) {
  return guarded([&] { emit(matrix, build(data_of(data))); });
}

ck_status ck_invert(const ck_doc* data, ck_doc** matrix) {
  return guarded([&] { emit(matrix, invert(data_of(data))); });
}

ck_status ck_solve(const ck_doc* data, const ck_doc* rhs, ck_doc** solution) {
  return guarded([&] {
    const CauchyData& d = data_of(data);
    const DenseMatrix& b = matrix_of(rhs);
    if (b.n_rows() != d.n())
      raise(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(b.n_rows()) +
                                              " rows, data have size " + std::to_string(d.n()));
    StructuredCauchy c(d);
    DenseMatrix y = DenseMatrix::zeros(d.field(), b.n_rows(), b.n_cols());
    for (std::size_t j = 0; j < b.n_cols(); ++j) {
      auto col = c.solve(b.col(j));
      for (std::size_t i = 0; i < col.size(); ++i) y(i, j) = col[i];
    }
    emit(solution, std::move(y));
  });
}

ck_status ck_alphas(const ck_doc* data, char** json) {
  return guarded([&] {
    const CauchyData& d = data_of(data);
    auto [a, at] = alphas(d);
    emit(json, alphas_json(d, a, at));
  });
}

ck_status ck_shift(const ck_doc* data, const char* zeta, ck_doc** out) {
  return guarded([&] {
    const CauchyData& d = data_of(data);
    emit(out, shift_data(d, d.field().parse_scalar(text_of(zeta, "zeta"))));
  });
}

ck_status ck_perm_equivalent(const ck_doc* a, const ck_doc* b, int* equivalent, char** json) {
  return guarded([&] {
    auto zeta = perm_equivalent(data_of(a), data_of(b));
    flag(equivalent, zeta.has_value());
    emit(json, perm_equivalence_json(zeta));
  });
}

ck_status ck_identities(const ck_doc* data, int* all_passed, char** json) {
  return guarded([&] {
    const CauchyData& d = data_of(data);
    auto checks = check_identities(d);
    bool all = true;
    for (const auto& c : checks) all = all && c.passed;
    flag(all_passed, all);
    emit(json, identities_json(d, checks));
  });
}

ck_status ck_recognize(const ck_doc* matrix, int* is_cauchy, char** json) {
  return guarded([&] {
    auto r = recognize(matrix_of(matrix));
    flag(is_cauchy, std::holds_alternative<CauchyData>(r));
    emit(json, recognize_json(r));
  });
}

ck_status ck_oracle_inverse(const ck_doc* matrix, ck_doc** inverse) {
  return guarded([&] {
    auto r = gaussian_inverse_oracle(matrix_of(matrix));
    if (const auto* s = std::get_if<Singular>(&r))
      raise(ErrorCode::Singular, "matrix is singular (rank " + std::to_string(s->rank) + ")");
    emit(inverse, std::get<DenseMatrix>(std::move(r)));
  });
}

ck_status ck_pair_from_data(const ck_doc* data, ck_doc** pair) {
  return guarded([&] { emit(pair, pair_from_data(data_of(data))); });
}

ck_status ck_pair_verify(const ck_doc* pair, int* verdict, char** json) {
  return guarded([&] {
    auto r = verify(pair_of(pair));
    flag(verdict, r.verdict);
    emit(json, report_json(r));
  });
}

ck_status ck_pair_eigenvalue_data(const ck_doc* pair, ck_doc** data) {
  return guarded([&] { emit(data, eigenvalue_data(pair_of(pair))); });
}

ck_status ck_pair_affine(const ck_doc* pair, const char* xi, const char* zeta, ck_doc** out) {
  return guarded([&] {
    const CauchyPair& p = pair_of(pair);
    const Field& f = p.field();
    emit(out, affine_transform(p, f.parse_scalar(text_of(xi, "xi")), f.parse_scalar(text_of(zeta, "zeta"))));
  });
}

ck_status ck_pair_equivalent(const ck_doc* p, const ck_doc* q, int* equivalent, char** json) {
  return guarded([&] {
    auto e = is_equivalent(pair_of(p), pair_of(q));
    flag(equivalent, e.has_value());
    emit(json, equivalence_json(e));
  });
}

ck_status ck_pairs_classify(const ck_doc* const* pairs, size_t count, char** json) {
  return guarded([&] {
    if (count > 0) need(pairs, "pair list");
    std::vector<CauchyPair> list;
    list.reserve(count);
    for (std::size_t k = 0; k < count; ++k) list.push_back(pair_of(pairs[k]));
    emit(json, classes_json(classify(list)));
  });
}

ck_status ck_frame_new(const ck_doc* data, const char* gamma, const char* rho, ck_frame** out) {
  return guarded([&] {
    need(out, "output handle");
    const CauchyData& d = data_of(data);
    const Field& f = d.field();
    *out = new ck_frame{Frame(d, f.parse_scalar(text_of(gamma, "gamma")), f.parse_scalar(text_of(rho, "rho")))};
  });
}

void ck_frame_free(ck_frame* frame) { delete frame; }

ck_status ck_frame_transition(const ck_frame* frame, const char* from, const char* to, ck_doc** matrix) {
  return guarded([&] {
    need(frame, "frame");
    emit(matrix, frame->frame.transition(parse_basis(text_of(from, "from")), parse_basis(text_of(to, "to"))));
  });
}

ck_status ck_frame_gram(const ck_frame* frame, const char* left, const char* right, ck_doc** matrix) {
  return guarded([&] {
    need(frame, "frame");
    emit(matrix, frame->frame.gram(parse_basis(text_of(left, "left")), parse_basis(text_of(right, "right"))));
  });
}

ck_status ck_frame_form(const ck_frame* frame, const ck_doc* u, const ck_doc* v, char** value) {
  return guarded([&] {
    need(frame, "frame");
    const DenseMatrix& mu = matrix_of(u);
    const DenseMatrix& mv = matrix_of(v);
    if (mu.n_cols() != 1 || mv.n_cols() != 1)
      raise(ErrorCode::DimensionMismatch, "form arguments must be column vectors");
    emit(value, frame->frame.form_evaluate(mu.col(0), mv.col(0)).to_string());
  });
}

ck_status ck_bench(const size_t* sizes, size_t count, size_t trials, uint64_t seed, char** csv) {
  return guarded([&] {
    if (count > 0) need(sizes, "size list");
    BenchOptions options;
    options.sizes.assign(sizes, sizes + count);
    options.trials = trials;
    options.seed = seed;
    emit(csv, bench_csv(run_bench(options)));
  });
}

}  // extern "C"
