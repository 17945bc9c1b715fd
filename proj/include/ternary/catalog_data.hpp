// Default catalog: the genera of the 29 spinor regular, non-regular positive
// ternaries, with per-prime local data and exceptional square classes.
#pragma once

#include <string_view>

namespace ternary {

inline constexpr std::string_view default_catalog_text = R"CATALOG(# ternary spinor-exceptional catalog
# forms are a,b,c,d,e,f of ax^2+by^2+cz^2+dyz+exz+fxy
# the first sgi form of each record is the spinor regular form
format ternary-catalog 1

id A1
delta 2^6
delta_listed 2^6
sgi 2,2,5,2,2,0
sgii 1,1,16,0,0,0
local.2.split <1,1,2^4>
local.2.norms {1,2,5,10}
local.2.lambda 1
local.2.subcase (b)(iii)
exceptional M1^2

id A2
delta 2^7
delta_listed 2^7
sgi 1,4,9,4,0,0
sgii 1,1,32,0,0,0
sgii 2,2,9,-2,2,0
local.2.split <1,1,2^5>
local.2.norms {1,2,5,10}
local.2.lambda 2
local.2.subcase (b)(iii)
exceptional 2M1^2

id A3
delta 2^8
delta_listed 2^8
sgi 2,5,8,4,0,2
sgii 1,1,64,0,0,0
sgii 2,2,17,2,-2,0
sgii 1,4,17,-4,0,0
local.2.split <1,1,2^6>
local.2.norms {1,2,5,10}
local.2.lambda 3
local.2.subcase (b)(iii)
exceptional M1^2, 4M1^2

id A4
delta 2^8
delta_listed 2^8
sgi 4,4,5,0,4,0
sgii 1,4,16,0,0,0
local.2.split <1,2^2,2^4>
local.2.norms {1,5}
local.2.lambda 1
local.2.subcase (b)(iii)
exceptional M1^2

id A5
delta 2^10
delta_listed 2^10
sgi 4,9,9,2,4,4
sgii 1,16,16,0,0,0
local.2.split <1,2^4,2^4>
local.2.norms {1,2,5,10}
local.2.lambda 1
local.2.subcase (b)(i)
exceptional M1^2

id A6
delta 2^10
delta_listed 2^10
sgi 4,5,13,2,0,0
sgii 1,16,20,-16,0,0
sgii 4,5,17,2,-4,-4
local.2.split <5,2^2,5*2^6>
local.2.norms {1,5}
local.2.lambda 1
local.2.subcase (b)(ii)
exceptional M1^2

id A7
delta 2^10
delta_listed 2^10
sgi 5,8,8,0,4,4
sgii 1,4,64,0,0,0
sgii 4,4,17,0,4,0
local.2.split <1,2^2,2^6>
local.2.norms {1,5}
local.2.lambda 3
local.2.subcase (b)(iii)
exceptional M1^2, 4M1^2

id A8
delta 2^11
delta_listed 2^11
sgi 4,8,17,0,4,0
sgii 1,8,64,0,0,0
local.2.split <1,2^3,2^6>
local.2.norms {1,2,3,6}
local.2.lambda 1
local.2.subcase (c)(iii)
exceptional M2^2

id A9
delta 2^12
delta_listed 2^12
sgi 9,9,16,8,8,2
sgii 1,16,64,0,0,0
sgii 4,16,17,0,-4,0
local.2.split <1,2^4,2^6>
local.2.norms {1,5}
local.2.lambda 3
local.2.subcase (b)(iii)
exceptional M1^2, 4M1^2

id A10
delta 2^12
delta_listed 2^12
sgi 4,9,32,0,0,4
sgii 1,32,32,0,0,0
sgii 4,17,17,2,4,4
local.2.split <1,2^5,2^5>
local.2.norms {1,2,5,10}
local.2.lambda 1
local.2.subcase (b)(iv)
exceptional M1^2

id A11
delta 2^12
delta_listed 2^12
sgi 5,13,16,0,0,2
sgii 4,16,21,16,4,0
sgii 4,5,64,0,0,-4
local.2.split <5,2^4,5*2^6>
local.2.norms {1,5}
local.2.lambda 3
local.2.subcase (b)(ii)
exceptional 4M1^2

id A12
delta 2^14
delta_listed 2^14
sgi 9,17,32,-8,8,6
sgii 1,16,256,0,0,0
sgii 16,16,17,-8,0,0
sgii 4,16,65,0,4,0
local.2.split <1,2^4,2^8>
local.2.norms {1,5}
local.2.lambda 5
local.2.subcase (b)(iii)
exceptional M1^2, 4M1^2, 16M1^2

id A13
delta 2^14
delta_listed 2^14
sgi 9,16,36,16,4,8
sgii 1,64,64,0,0,0
sgii 4,33,33,2,4,4
sgii 4,17,64,0,0,-4
local.2.split <1,2^6,2^6>
local.2.norms {1,2,5,10}
local.2.lambda 3
local.2.subcase (b)(i)
exceptional M1^2, 4M1^2

id B1
delta 2^2*3^3
delta_listed 2^2*3^3
sgi 3,3,4,0,0,3
sgii 1,1,36,0,0,1
local.2.split A + <2^3>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (ii)(beta)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2

id B2
delta 2^2*3^3
delta_listed 2^2*3^3
sgi 3,4,4,4,3,3
sgii 1,3,10,-3,1,0
local.2.split H + <5*2^3>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (ii)(alpha)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2

id B3
delta 2^2*3^4
delta_listed 2^2*3^4
sgi 1,7,12,0,0,1
sgii 3,3,13,-3,3,-3
sgii 1,1,108,0,0,1
local.2.split A + <3*2^3>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (ii)(beta)
local.3.split <1,3,3^3>
local.3.norms {1,3}
exceptional 3M3^2

id B4
delta 2^4*3^3
delta_listed 2^4*3^3
sgi 3,7,7,5,3,3
sgi 3,3,16,0,0,-3
sgii 1,1,144,0,0,1
sgii 1,3,37,3,1,0
local.2.split A + <2^5>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.2.lambda 3
local.2.subcase (ii)(beta)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2, 4M3^2

id B5
delta 2^4*3^3
delta_listed 2^4*3^3
sgi 4,4,9,0,0,4
sgii 1,12,12,12,0,0
local.2.split <1> + 2A
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (ii)(gamma)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2

id B6
delta 2^4*3^3
delta_listed 2^4*3^3
sgi 3,4,9,0,0,0
sgii 1,3,36,0,0,0
local.2.split <1,3,2^2>
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (i)(beta)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2

id B7
delta 2^6*3^3
delta_listed 2^6*3^3
sgi 4,9,12,0,0,0
sgii 1,12,36,0,0,0
local.2.split <1,2^2,3*2^2>
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (i)(alpha)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2

id B8
delta 2^4*3^5
delta_listed 2^4*3^5
sgi 4,9,28,0,4,0
sgii 1,36,36,-36,0,0
sgii 9,13,13,-10,-6,-6
local.2.split <1> + 2A
local.2.norms {1,3,5,7}
local.2.lambda 1
local.2.subcase (ii)(gamma)
local.3.split <1,3^2,3^3>
local.3.norms {1,3}
exceptional M3^2

id B9
delta 2^8*3^3
delta_listed 2^8*3^3
sgi 9,16,16,16,0,0
sgii 1,48,48,-48,0,0
local.2.split <1> + 2^3A
local.2.norms {1,3,5,7}
local.2.lambda 3
local.2.subcase (ii)(gamma)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2, 4M3^2

id B10
delta 2^8*3^3
delta_listed 2^8*3^3
sgi 13,13,16,-8,8,10
sgii 4,13,37,-2,4,-4
local.2.split <5> + 2^3H
local.2.norms {1,3,5,7}
local.2.lambda 3
local.2.subcase (ii)(gamma)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional 4M3^2

id B11
delta 2^10*3^3
delta_listed 2^10*3^3
sgi 9,16,48,0,0,0
sgi 16,25,25,-14,16,-16
sgii 1,48,144,0,0,0
sgii 4,49,49,-46,4,4
local.2.split <1,2^4,3*2^4>
local.2.norms {1,3,5,7}
local.2.lambda 3
local.2.subcase (i)(alpha)
local.3.split <1,3,3^2>
local.3.norms {1,3}
exceptional M3^2, 4M3^2

id B12
delta 2^8*3^5
delta_listed 2^8*3^5
sgi 9,16,112,16,0,0
sgii 1,144,144,144,0,0
sgii 9,49,49,-46,6,6
local.2.split <1> + 2^3A
local.2.norms {1,3,5,7}
local.2.lambda 3
local.2.subcase (ii)(gamma)
local.3.split <1,3^2,3^3>
local.3.norms {1,3}
exceptional M3^2, 4M3^2

# group C: delta_listed is 4*delta
id C1
delta 7^3
delta_listed 2^2*7^3
sgi 2,7,8,7,1,0
sgii 1,7,14,7,0,0
sgii 1,2,49,0,0,1
local.2.split H + <2>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.7.split <1,7,7^2>
local.7.norms {1,7}
exceptional M7^2

id C2
delta 2^2*7^3
delta_listed 2^4*7^3
sgi 7,8,9,6,7,0
sgii 4,7,15,-7,4,0
sgii 1,7,51,-7,-1,0
local.2.split A + <5*2^3>
local.2.split_scale 2
local.2.norms {1,3,5,7}
local.7.split <1,7,7^2>
local.7.norms {1,7}
exceptional M7^2

id C3
delta 2^4*7^3
delta_listed 2^6*7^3
sgi 8,9,25,2,4,8
sgii 1,28,56,-28,0,0
sgii 4,8,49,0,0,4
local.2.split <1> + 2H
local.2.norms {1,3,5,7}
local.7.split <1,7,7^2>
local.7.norms {1,7}
exceptional M7^2

id C4
delta 2^8*7^3
delta_listed 2^10*7^3
sgi 29,32,36,32,12,24
sgii 4,29,197,-2,-4,4
sgii 16,32,53,-8,16,-16
local.2.split <5> + 2^3A
local.2.norms {1,3,5,7}
local.7.split <1,7,7^2>
local.7.norms {1,7}
exceptional 4M7^2

end 29
)CATALOG";

}  // namespace ternary
