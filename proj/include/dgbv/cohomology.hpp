#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dgbv/exterior.hpp"
#include "dgbv/form.hpp"
#include "dgbv/linalg.hpp"
#include "dgbv/model.hpp"

namespace dgbv {

/* Basis of the degree-k component: subsets of size k in tuple-lex order. */
std::vector<Subset> degree_subsets(int ngen, int k);
std::vector<Rat> form_to_vec(const Form& f, int k);  // throws on off-degree terms
Form vec_to_form(int ngen, int k, const std::vector<Rat>& v);

/* Matrix of a linear operator Omega^k_in -> Omega^k_out in those bases
 * (columns indexed by the source basis). */
Mat operator_matrix(const Model& model, int k_in, int k_out,
                    const std::function<Form(const Form&)>& op);

RowSpace kernel_space(const Model& model, int k_in, int k_out,
                      const std::function<Form(const Form&)>& op);
RowSpace image_space(const Model& model, int k_in, int k_out,
                     const std::function<Form(const Form&)>& op);

struct CohomClass {
	Form rep;       // closed, reduced against the exact subspace
	bool harmonic;  // rep also lies in ker delta
};

struct CohomologyBasis {
	std::vector<int> betti;                          // size 2m+1
	std::vector<std::vector<CohomClass>> by_degree;  // canonical representatives
	bool all_harmonic = true;

	/* Flattened c_0 .. c_{r-1}, degree-ascending (c_0 = 1). */
	std::vector<Form> flat() const;
	std::vector<int> degrees() const;
	std::vector<std::uint8_t> parities() const;
	int total_rank() const;
};

/* de Rham cohomology with canonical echelon representatives; each class is
 * re-solved into ker delta when the correcting linear system is consistent. */
CohomologyBasis cohomology_d(const Model& model);

/* Dimensions of ker delta / im delta per degree. */
std::vector<int> cohomology_delta_dims(const Model& model);

struct LefschetzReport {
	std::vector<int> betti;
	std::vector<int> ranks;      // rank of [omega^k]: H^{m-k} -> H^{m+k}, k = 0..m
	std::vector<bool> iso;       // per k
	bool pass = false;
	int first_failure = -1;      // smallest failing k, or -1
};

LefschetzReport hard_lefschetz_check(const Model& model, const CohomologyBasis& basis);

struct MathieuReport {
	bool hard_lefschetz;   // (i)
	bool quotient_iso;     // (ii) (Omega, delta) -> (Omega/d Omega, delta) q-iso
	bool harmonic_reps;    // (iii) every class has a representative in ker delta
	bool consistent() const {
		return hard_lefschetz == quotient_iso && quotient_iso == harmonic_reps;
	}
};

/* The three equivalences, each computed independently. */
MathieuReport mathieu_check(const Model& model);

struct DdDeltaReport {
	std::vector<int> dim_im_d_delta;
	std::vector<int> dim_im_d_cap_ker_delta;
	std::vector<int> dim_im_delta_cap_ker_d;
	std::vector<bool> equal;  // per degree, both inclusions both ways
	bool pass = false;
};

/* im(d delta) = im(d) cap ker(delta) = im(delta) cap ker(d), degreewise, by
 * double inclusion. */
DdDeltaReport dd_delta_check(const Model& model);

struct FormalityReport {
	bool refused = false;  // precondition (dd-delta) violated
	std::string reason;
	std::vector<int> h_ker_delta;   // cohomology dims of (ker delta, d)
	std::vector<bool> incl_iso;     // (ker delta, d) -> (Omega, d) per degree
	std::vector<bool> proj_iso;     // (ker delta, d) -> (H(Omega, delta), 0) per degree
	bool pass = false;
};

/* Both quasi-isomorphism witnesses through the subcomplex ker delta. */
FormalityReport formality_witness(const Model& model);

}  // namespace dgbv
