#include "ordalg/classes.hpp"

#include "ordalg/implication.hpp"
#include "ordalg/order.hpp"
#include "ordalg/residuated.hpp"
#include "ordalg/sectioned.hpp"
#include "ordalg/varieties.hpp"

namespace ordalg {

Report validate_class(Algebra const& alg, ClassTag tag, bool subvariety) {
  switch (tag) {
    case ClassTag::jsl: return validate_join_semilattice(alg);
    case ClassTag::sectioned: return validate_sectioned(alg);
    case ClassTag::ncis: return validate_ncis(alg);
    case ClassTag::srs: {
      if (!alg.prod_table()) {
        return Report::fail("prod", {}, "-", "-", "missing prod table");
      }
      return validate_srs(srs_from_table(alg));
    }
    case ClassTag::rrs: return validate_rrs(alg);
    case ClassTag::ialg: return validate_ialgebra(alg);
    case ClassTag::ralg: return validate_ralgebra(alg, subvariety);
    case ClassTag::none: break;
  }
  throw PreconditionError("no class given");
}

ClassTag infer_class(Algebra const& alg) {
  if (alg.class_tag() != ClassTag::none) return alg.class_tag();
  if (alg.r_table()) return ClassTag::ialg;
  if (alg.q_table()) return ClassTag::ralg;
  if (alg.prod_table()) return ClassTag::rrs;
  if (alg.imp_table()) return ClassTag::ncis;
  if (validate_join_semilattice(alg) && validate_sectioned(alg)) {
    return ClassTag::sectioned;
  }
  return ClassTag::jsl;
}

namespace {

  Algebra bridge(Algebra const& alg, BridgeDirection direction) {
    BridgeResult res = ncis_rrs_bridge(alg, direction);
    if (!res.algebra) {
      throw PreconditionError("bridge failed at " + res.report.axiom);
    }
    return *res.algebra;
  }

}  // namespace

Algebra as_ncis(Algebra const& alg) {
  switch (infer_class(alg)) {
    case ClassTag::ncis: return alg;
    case ClassTag::sectioned: return derive_implication(alg.bare());
    case ClassTag::ialg: return ncis_from_ialgebra(alg);
    case ClassTag::srs:
    case ClassTag::rrs: return bridge(alg, BridgeDirection::to_ncis);
    case ClassTag::ralg:
      return bridge(rrs_from_ralgebra(alg), BridgeDirection::to_ncis);
    default: break;
  }
  throw PreconditionError("model has no implication presentation");
}

Algebra as_rrs(Algebra const& alg) {
  switch (infer_class(alg)) {
    case ClassTag::srs:
    case ClassTag::rrs: return alg.with_class(ClassTag::rrs);
    case ClassTag::ralg: return rrs_from_ralgebra(alg);
    case ClassTag::ncis:
    case ClassTag::sectioned:
    case ClassTag::ialg: return bridge(as_ncis(alg), BridgeDirection::to_rrs);
    default: break;
  }
  throw PreconditionError("model has no product presentation");
}

Algebra as_total(Algebra const& alg) {
  switch (infer_class(alg)) {
    case ClassTag::jsl: return alg.bare();
    case ClassTag::ialg:
    case ClassTag::ralg: return alg;
    case ClassTag::ncis:
    case ClassTag::sectioned: return ialgebra_from_ncis(as_ncis(alg));
    case ClassTag::srs:
    case ClassTag::rrs: return ralgebra_from_rrs(as_rrs(alg));
    default: break;
  }
  throw PreconditionError("model has no total presentation");
}

}  // namespace ordalg
