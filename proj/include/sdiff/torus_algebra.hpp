#pragma once

#include "sdiff/fourier.hpp"

namespace sdiff {

/// Poisson bracket of stream functions, {e_k, e_l} = (k x l) e_{k+l},
/// extended bilinearly. Antisymmetric; the constant mode is dropped.
FourierVector poisson_bracket(const FourierVector& u, const FourierVector& v);

/// B(e_k, e_l) = (k x l) ||k||^2 / ||k+l||^2 e_{k+l}, the operator with
/// <B(u,v), w> = <u, {v,w}>. Mode pairs with k+l = 0 contribute zero.
FourierVector b_operator(const FourierVector& u, const FourierVector& v);

/// nabla_{e_k} e_l = (k x l)(k.l + ||l||^2) / ||k+l||^2 e_{k+l}. Satisfies
/// nabla_u v = ({u,v} - B(u,v) - B(v,u)) / 2.
FourierVector covariant_derivative(const FourierVector& u, const FourierVector& v);

/// R(u,v)w = -nabla_u nabla_v w + nabla_v nabla_u w + nabla_{{u,v}} w.
FourierVector riemann_apply(const FourierVector& u, const FourierVector& v,
                            const FourierVector& w);

/// <R(e_k, e_l) e_m, e_n>: zero unless k+l+m+n = 0, otherwise
/// (d_{ln} d_{km} - d_{lm} d_{kn}) S_T with d_{uv} = (u x v)^2 / ||u+v||
/// (d_{uv} = 0 when u+v = 0; the numerator vanishes there).
double riemann_quadruple(LatticeMode k, LatticeMode l, LatticeMode m, LatticeMode n,
                         double torus_area = kDefaultTorusArea);

/// <R(u,v)u, v> expanded as a quadruple sum of riemann_quadruple over the
/// supports (C-multilinear, so the operands must be real-valued).
double riemann_contraction(const FourierVector& u, const FourierVector& v);

enum class OracleMethod {
    tensor,         // quadruple sum of <R(e_k,e_l)e_m,e_n>
    short_formula,  // <d,d> + 2<a,b> - 3<a,a> on an orthonormalized pair
};

/// Brute-force sectional curvature C(u,v) of the plane spanned by two
/// real-valued stream functions. Throws precondition_error for parallel or
/// zero inputs. Invariant under rescaling of either argument.
double sectional_curvature_oracle(const FourierVector& u, const FourierVector& v,
                                  OracleMethod method);

}  // namespace sdiff
