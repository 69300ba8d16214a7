#pragma once

// Local predicates on triples a<b<c and quadruples a<b<c<d of inner
// vertices. Triples are passed as (X,Y,Z) = (type(a,b), type(a,c), type(b,c)).

#include <optional>

#include "outerdraw/core.hpp"

namespace outerdraw {

/// Uniform alphabet [k]: legal iff Y is one of X, Z. Throws InputError on
/// symbols outside 1..k.
bool legal_triple_uniform(int x, int y, int z, int k);

/// If type(a,c) = type(b,c) = type(b,d) = X then type(a,d) = X.
bool quad_uniform_ok(const UniformTable& t, int a, int b, int c, int d);

/// Seventeen legal triples: Y in {X,Z}, plus (N,A,B) and (A,B,N).
bool legal_triple_2(PairType2 x, PairType2 y, PairType2 z);

/// Both guarded quadruple implications:
///   type(a,b) != N and type(a,c)=type(b,c)=type(b,d)=B  =>  type(a,d)=B
///   type(c,d) != N and type(a,c)=type(b,c)=type(b,d)=A  =>  type(a,d)=A
bool quad_2_ok(const Table2& t, int a, int b, int c, int d);

/// First failing tuple of `t` (labels in the left rotation order), scanning
/// tuples lexicographically with every triple before its extensions.
std::optional<Violation> first_violation_2(const Table2& t);
std::optional<Violation> first_violation_uniform(const UniformTable& t, int k);

}  // namespace outerdraw
