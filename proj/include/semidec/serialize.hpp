#ifndef SEMIDEC_SERIALIZE_HPP_
#define SEMIDEC_SERIALIZE_HPP_

#include <map>
#include <string>

#include "json.hpp"

#include "semidec/monoid.hpp"

namespace semidec {

  //! Rebuilds monoids and carriers from their descriptors. Results are
  //! cached per descriptor, so one Rebuilder shares sub-structures.
  class Rebuilder {
   public:
    explicit Rebuilder(std::size_t limit = default_monoid_limit) : limit_(limit) {}

    MonoidPtr  monoid(nlohmann::json const& descriptor);
    CarrierPtr carrier(nlohmann::json const& descriptor);

   private:
    MonoidPtr  build_monoid(nlohmann::json const& d);
    CarrierPtr build_carrier(nlohmann::json const& d);

    std::size_t                       limit_;
    std::map<std::string, MonoidPtr>  monoids_;
    std::map<std::string, CarrierPtr> carriers_;
  };

  // {"label", "size", "identity", "descriptor", "elements": [hex], "render": [..]}
  nlohmann::json monoid_to_json(Monoid const& m);
  // Rebuilds from the descriptor and checks the listed elements and identity.
  MonoidPtr monoid_from_json(nlohmann::json const& j, std::size_t limit = default_monoid_limit);

  // Selectors: "greens", "depth", "properties".
  nlohmann::json analysis_to_json(Monoid const& m, std::vector<std::string> const& reports);
  std::string    analysis_to_text(nlohmann::json const& analysis);

  // Hasse diagram of the J-order; essential classes are filled.
  std::string j_order_dot(Monoid const& m);

  nlohmann::json read_json_file(std::string const& path);
  void           write_text_file(std::string const& path, std::string const& text);
  // Two-space indented, sorted keys, trailing newline.
  std::string    dump(nlohmann::json const& j);

}  // namespace semidec

#endif  // SEMIDEC_SERIALIZE_HPP_
