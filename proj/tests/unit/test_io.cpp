#include <doctest.h>

#include <random>

#include "pdnf/error.hpp"
#include "pdnf/io.hpp"
#include "support/oracle.hpp"

using namespace pdnf;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    parse_field_file(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a field file") {
  const FieldFile f = parse_field_file(R"(# comment
format pdnf 1
dim 2
vars u v
eigenvalues 1 -1/2+i
term comp=2 coeff=3/4 exps=1,1   # trailing comment
)");
  CHECK(f.dim() == 2);
  CHECK(f.vars == std::vector<std::string>{"u", "v"});
  CHECK(f.exact);
  CHECK(f.field.order() == 2);
  CHECK(f.field.coeff(1, Monomial{0, 1}) == Scalar(Rational(-1, 2), 1));
  CHECK(f.field.coeff(1, Monomial{1, 1}) == Scalar(Rational(3, 4)));
  CHECK(f.prepared(6).order() == 6);
}

TEST_CASE("truncated files refuse higher orders") {
  const FieldFile f = parse_field_file("format pdnf 1\ndim 1\norder 3\neigenvalues 2\nterm comp=1 coeff=1 exps=3\n");
  CHECK_FALSE(f.exact);
  CHECK(f.prepared(2).order() == 2);
  try {
    f.prepared(4);
    FAIL("expected order_exceeds_input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::order_exceeds_input);
  }
}

TEST_CASE("linear_matrix conjugates y = M x") {
  const FieldFile f = parse_field_file(R"(format pdnf 1
dim 2
term comp=1 coeff=1 exps=2,0
term comp=2 coeff=-1 exps=1,0
term comp=2 coeff=1 exps=0,1
linear_matrix
1 0
-1 1
end
)");
  const PolyVectorField g = f.prepared(4);
  CHECK(g.spectrum() == std::optional<Spectrum>(Spectrum{0, 1}));
  CHECK(g.coeff(0, Monomial{2, 0}) == Scalar(1));
  CHECK(g.coeff(1, Monomial{2, 0}) == Scalar(-1));
}

TEST_CASE("serialize and parse round trip") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    FieldFile f = make_field_file(oracle::random_field(rng, 3, 4, 5, 6), t % 2 == 0);
    if (f.exact) f.field = f.field.retagged(std::max(1, f.field.min_degree()));
    if (f.exact) {
      int top = 1;
      for (std::size_t j = 0; j < 3; ++j) top = std::max(top, f.field[j].max_degree());
      f.field = f.field.retagged(top);
    }
    if (t % 3 == 0) f.linear_matrix = Matrix{{1, 2, 0}, {0, 1, 0}, {Scalar::i(), 0, 1}};
    const std::string text = serialize_field_file(f);
    CHECK(parse_field_file(text) == f);
    CHECK(serialize_field_file(parse_field_file(text)) == text);
  }
}

TEST_CASE("non-diagonal linear parts serialize as term lines") {
  PolyVectorField g(2, 3);
  g.add_term(0, Monomial{0, 1}, 1);
  g.add_term(1, Monomial{1, 0}, -1);
  const FieldFile f = make_field_file(g);
  const std::string text = serialize_field_file(f);
  CHECK(text.find("eigenvalues") == std::string::npos);
  CHECK(parse_field_file(text) == f);
}

TEST_CASE("parse errors carry line and field context") {
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=3 coeff=1 exps=1,1\n").find("line 3") == 0);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=3 coeff=1 exps=1,1\n").find("'comp'") != std::string::npos);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=1 coeff=1/0 exps=1,1\n").find("'coeff'") != std::string::npos);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=1 coeff=1 exps=1\n").find("exps") != std::string::npos);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=1 coeff=1 exps=0,0\n").find("constant") != std::string::npos);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=1 exps=1,1\n").find("missing field 'coeff'") !=
        std::string::npos);
  CHECK(parse_error_of("format pdnf 1\ndim 2\nterm comp=1 comp=1 coeff=1 exps=1,1\n").find("duplicate") !=
        std::string::npos);
  CHECK(parse_error_of("format pdnf 1\nterm comp=1 coeff=1 exps=1,1\n").find("'dim' must come first") !=
        std::string::npos);
  CHECK(parse_error_of("format pdnf 2\n").find("line 1") == 0);
  CHECK(parse_error_of("dim 2\nfrobnicate\n").find("unknown directive") != std::string::npos);
  CHECK(parse_error_of("dim 2\nlinear_matrix\n1 0\n0 0\nend\n").find("singular") != std::string::npos);
  CHECK(parse_error_of("dim 2\nlinear_matrix\n1 0\n0 1\n").find("end") != std::string::npos);
  CHECK(parse_error_of("dim 2\nvars a\n").find("line 2") == 0);
  CHECK(parse_error_of("dim 2\nparams e\n").find("family") != std::string::npos);
  CHECK(parse_error_of("").find("dim") != std::string::npos);
  CHECK(parse_error_of("dim 1\norder 2\nterm comp=1 coeff=1 exps=3\n").find("line 3: term: degree 3 exceeds order 2") ==
        0);
}

TEST_CASE("family files") {
  const std::string text = R"(format pdnf 1
dim 2
vars z w
params eta
order 3
a_entry row=1 col=1 coeff=i exps=0
a_entry row=1 col=1 coeff=1 exps=1
a_entry row=2 col=2 coeff=-i exps=0
a_entry row=2 col=2 coeff=1 exps=1
f_term comp=1 coeff=-1 xexps=2,1 pexps=0
)";
  const ParamFamily fam = parse_family_file(text);
  CHECK(fam.n == 2);
  CHECK(fam.p == 1);
  CHECK(fam.param_names == std::vector<std::string>{"eta"});
  CHECK(fam.a_at_zero() == Matrix::diagonal({Scalar::i(), -Scalar::i()}));
  const ParamFamily again = parse_family_file(serialize_family_file(fam));
  CHECK(serialize_family_file(again) == serialize_family_file(fam));
  CHECK(again.f_terms[0] == fam.f_terms[0]);

  CHECK_THROWS_AS(parse_family_file("dim 2\nparams e\nf_term comp=1 coeff=1 xexps=1,0 pexps=1\n"), Error);
  CHECK_THROWS_AS(parse_family_file("dim 2\na_entry row=1 col=1 coeff=1 exps=0\n"), Error);
  CHECK_THROWS_AS(parse_family_file("dim 2\nparams e\nterm comp=1 coeff=1 exps=1,1\n"), Error);
  CHECK_THROWS_AS(parse_family_file("dim 2\nparams e\na_entry row=1 col=2 coeff=1 exps=0\n"), Error);
}

TEST_CASE("file helpers report io errors") {
  try {
    read_text_file("/nonexistent/path/file.pdnf");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}
