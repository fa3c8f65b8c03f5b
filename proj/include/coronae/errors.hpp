#pragma once

#include <stdexcept>
#include <string>

namespace coronae {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CORONAE_ERROR_TYPE(Name) \
  struct Name : Error {          \
    using Error::Error;          \
  }

// graph construction / parsing
CORONAE_ERROR_TYPE(EndpointOutOfRange);
CORONAE_ERROR_TYPE(LoopEdge);
CORONAE_ERROR_TYPE(MalformedHeader);
CORONAE_ERROR_TYPE(TruncatedBitVector);
CORONAE_ERROR_TYPE(NonPrintableByte);
CORONAE_ERROR_TYPE(UnknownName);
CORONAE_ERROR_TYPE(BadParams);
CORONAE_ERROR_TYPE(EmptyGraph);

// linear algebra
CORONAE_ERROR_TYPE(OrderTooLarge);
CORONAE_ERROR_TYPE(NoConvergence);

// polynomial / rational arithmetic
CORONAE_ERROR_TYPE(DivisionByZeroFunction);
CORONAE_ERROR_TYPE(ComplexRootsDetected);
CORONAE_ERROR_TYPE(PoleProximity);

// product constructions
CORONAE_ERROR_TYPE(EmptyG1);
CORONAE_ERROR_TYPE(NoEdgesInG1);
CORONAE_ERROR_TYPE(NoEdges);

// theorem preconditions
CORONAE_ERROR_TYPE(NotRegular);
CORONAE_ERROR_TYPE(PartsEqual);

// isospectral machinery
CORONAE_ERROR_TYPE(InadmissibleRecipe);
CORONAE_ERROR_TYPE(OrderMismatch);

// internal consistency failures (bugs, not input conditions)
CORONAE_ERROR_TYPE(AssemblyError);

#undef CORONAE_ERROR_TYPE

}  // namespace coronae
