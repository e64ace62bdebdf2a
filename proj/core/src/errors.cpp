#include "bisimod/errors.hpp"

namespace bisimod {

ParseError::ParseError(std::string msg, std::size_t offset_,
                       std::vector<std::string> expected_)
    : Error(msg + " at offset " + std::to_string(offset_)),
      offset(offset_),
      expected(std::move(expected_)) {}

ValidationError::ValidationError(const std::string& msg, std::string path_)
    : Error(msg + " (at " + path_ + ")"), path(std::move(path_)) {}

UnknownFixture::UnknownFixture(const std::string& name)
    : Error("unknown fixture '" + name + "'") {}

UnknownWorld::UnknownWorld(const std::string& world)
    : Error("unknown world '" + world + "'") {}

SkeletonTooLarge::SkeletonTooLarge(std::size_t vars_, std::size_t cap_)
    : Error("propositional skeleton has " + std::to_string(vars_) +
            " variables, cap is " + std::to_string(cap_)),
      vars(vars_),
      cap(cap_) {}

} // namespace bisimod
