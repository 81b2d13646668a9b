#include "linkvol/tables.hpp"

namespace linkvol {

const std::vector<BoundsRow>& bounds_table() {
    static const std::vector<BoundsRow> t = {
        {1, "4_1", "2 2", "p q", "2V0", "2V1"},
        {2, "5_1^2", "2 1 2", "p 1 q", "V1", "2V1"},
        {3, "6_3^2", "2 2 2", "p q r", "5.3334895669", "4V1"},
        {4, "6_1^3", "2,2,2", "p,q,r", "5.3334895669", "4V1"},
        {5, "6_3", "2 1 1 2", "p 1 1 q", "5.6930210913", "4V1"},
        {6, "7_6", "2 2 1 2", "p q 1 r", "7.0849259535", "4V1"},
        {7, "7_7", "2 1 1 1 2", "p 1 1 1 q", "7.643375172", "11.7518362"},
        {8, "7_5^2", "2 1,2,2", "p 1,q,r", "7.706911803", "16.0004687"},
        {9, "7_1^3", "2,2,2+", "p,q,r+", "7.706911803", "16.0004687"},
        {10, "7_6^2", ".2", ".p", "8.997351944", "10.991871"},
        {11, "8_12", "2 2 2 2", "p q r s", "8.935856927", "6V1"},
        {12, "8_7^2", "2 1 2 1 2", "p 1 q 1 r", "8.830664955", "4V1"},
        {13, "8_8^2", "2 1 1 1 1 2", "p 1 1 1 1 q", "9.672807731", "13.9396857"},
        {14, "8_1^4", "2,2,2,2", "p,q,r,s", "10.14941606", "24.09218408"},
        {15, "8_4^3", "(2,2) (2,2)", "(p,q) (r,s)", "10.14941606", "24.09218408"},
        {16, "8_9^2", "2 2,2,2", "p q,r,s", "8.967360849", "6V1"},
        {17, "8_3^3", "2,2,2++", "p,q,r++", "8.967360849", "6V1"},
        {18, "8_10^2", "2 1 1,2,2", "p 1 1,q,r", "9.659498545", "17.6277542"},
        {19, "8_12^2", "2 1,2,2+", "p 1,q,r+", "9.659498545", "17.6277542"},
        {20, "8_15", "2 1,2 1,2", "p 1,q 1,r", "9.930648294", "17.6277542"},
        {21, "8_13^2", ".2 1", ".p 1", "11.3707742", "13.81327844"},
        {22, "8_14^2", ".2:2", ".p:q", "10.6669791", "4V1"},
        {23, "8_6^3", ".2:2 0", ".p:q 0", "10.6669791", "4V1"},
        {24, "8_16", ".2.2 0", ".p.q 0", "10.57902192", "15.03537979"},
        {25, "8_17", ".2.2", ".p.q", "10.98590761", "16.11428997"},
        {26, "9_23", "2 2 1 2 2", "p q 1 r s", "10.6113483", "6V1"},
        {27, "9_11^2", "2 2 2 1 2", "p q r 1 s", "10.75904664", "6V1"},
        {28, "9_27", "2 1 2 1 1 2", "p 1 q 1 1 r", "10.99998096", "17.47714082"},
        {29, "9_12^2", "2 2 1 1 1 2", "p q 1 1 1 r", "11.1884778", "19.0795609"},
        {30, "9_24^2", "2 1,2 1,2 1", "p 1,q 1,r 1", "12.046092", "18.8316834"},
        {31, "9_18^2", "2 2 1,2,2", "p q 1,r,s", "11.3817861", "19.5826692"},
        {32, "9_25", "2 2,2 1,2", "p q,r 1,s", "11.39030515", "23.3281935"},
        {33, "9_1^3", "2 1 2,2,2", "p 1 q,r,s", "10.74025767", "6V1"},
        {34, "9_28^2", "2 1,2,2++", "p 1,q,r++", "10.74025767", "6V1"},
        {35, "9_2^3", "2 1 1 1,2,2", "p 1 1 1,q,r", "11.76223429", "19.5826692"},
        {36, "9_26^2", "2 1 1,2,2+", "p 1 1,q,r+", "11.76223429", "19.5826692"},
        {37, "9_4^3", "2 1,2,2,2", "p 1,q,r,s", "12.2765628", "24.55255516"},
        {38, "9_30^2", "(2 1,2) (2,2)", "(p 1,q) (r,s)", "12.2765628", "24.55255516"},
        {39, "9_30", "2 1 1,2 1,2", "p 1 1,q 1,r", "11.95452697", "19.58266925"},
        {40, "9_1^4", "2,2,2,2+", "p,q,r,s+", "11.75183617", "24.55255552"},
        {41, "9_8^3", "(2,2+) (2,2)", "(p,q+) (r,s)", "11.75183617", "24.55255552"},
        {42, "9_9^3", "(2,2) 1 (2,2)", "(p,q) 1 (r,s)", "11.75183617", "24.55255552"},
        {43, "9_25^2", "2 2,2,2+", "p q,r,s+", "11.38178609", "23.32819345"},
        {44, "9_28", "2 1,2 1,2+", "p 1,q 1,r+", "11.56317702", "18.83168337"},
        {45, "9_10^3", ".2 1 1", ".p 1 1", "13.32336092", "15.4156985"},
        {46, "9_11^3", ".2 1:2", ".p 1:q", "13.04040137", "17.47714082"},
        {47, "9_38^2", ".2 1:2 0", ".p 1:q 0", "13.04040137", "17.47714082"},
        {48, "9_33", ".2 1.2", ".p 1.q", "13.28045564", "18.10505153"},
        {49, "9_32", ".2 1.2 0", ".p 1.q 0", "13.09989985", "18.1050515"},
        {50, "9_29", ".2.2 0.2", ".p.q 0.r", "12.20585617", "19.3538168"},
        {51, "9_41^2", "2:2 0:2 0", "p:q 0:r 0", "12.95742943", "22.07666239"},
        {52, "9_41", "2 0:2 0:2 0", "p 0:q 0:r 0", "12.09893603", "21.1717152"},
        {53, "9_38", ".2.2.2", ".p.q.r", "12.9328587", "20.72523729"},
        {54, "9_40^2", "2:2:2", "p:q:r", "12.04609204", "18.8316834"},
        {55, "9_39^2", ".2.2.2 0", ".p.q.r 0", "12.53617026", "19.7968546"},
        {56, "9_39", "2:2:2 0", "p:q:r 0", "12.81031", "21.0293868"},
        {57, "9_12^3", ".(2,2)", ".(p,q)", "13.81327844", "19.66433108"},
        {58, "9_42^2", "8*2", "8*p", "13.9484177", "16.0562293"},
        {59, "9_34", "8*2 0", "8*p 0", "14.34458139", "16.69568447"},
        {60, "6_3^3", "2,2,-2", "p,q,-r", "0", "4V1"},
        {61, "7_8^2", "2 1,2,-2", "p 1,q,-r", "V1", "16.0004687"},
        {62, "8_21", "2 1,2 1,-2", "p 1,q 1,-r", "6.78371352", "17.6277542"},
        {63, "8_15^2", "2 2,2,-2", "p q,r,-s", "V1", "6V1"},
        {64, "8_16^2", "2 1 1,2,-2", "p 1 1,q,-r", "5.3334895669", "17.6277542"},
        {65, "8_2^4", "2,2,2,-2", "p,q,r,-s", "2V1", "24.09218408"},
        {66, "8_9^3", "(2,2) (2,-2)", "(p,q) (r,-s)", "2V1", "24.09218408"},
        {67, "8_3^4", "2,2,-2,-2", "p,q,-r,-s", "0", "24.09218408"},
        {68, "8_10^3", "(2,2) -(2,2)", "(p,q) -(r,s)", "0", "24.09218408"},
        {69, "9_44", "2 2,2 1,-2", "p q,r 1,-s", "7.4067675724", "23.32819345"},
        {70, "9_45", "2 1 1,2 1,-2", "p 1 1,q 1,-r", "8.6020031166", "19.58266925"},
        {71, "9_48^2", "2 2 1,2,-2", "p q 1,r,-s", "7.706911803", "19.5826692"},
        {72, "9_14^3", "2 1 1 1,2,-2", "p 1 1 1,q,-r", "7.706911803", "19.5826692"},
        {73, "9_13^3", "2 1 2,2,-2", "p 1 q,r,-s", "5.3334895669", "6V1"},
        {74, "9_16^3", "2 1,2,2,-2", "p 1,q,r,-s", "9.966511884", "24.55255516"},
        {75, "9_58^2", "(2 1,-2) (2,2)", "(p 1,-q) (r,s)", "9.966511884", "24.55255516"},
        {76, "9_56^2", "(2 1,2) (2,-2)", "(p 1,q) (r,-s)", "8.997351944", "24.55255516"},
        {77, "9_60^2", "(2 1,2) -(2,2)", "(p 1,q) -(r,s)", "5.333489567", "24.55255516"},
        {78, "9_18^3", "(2,2+) (2,-2)", "(p,q+) (r,-s)", "2V1", "24.55255516"},
        {79, "9_19^3", "(2,2+) -(2,2)", "(p,q+) -(r,s)", "2V1", "24.55255516"},
        {80, "9_61^2", "2:-2 0:-2 0", "p:-q 0:-r 0", "0", "22.07666239"},
        {81, "9_49", "-2 0:-2 0:-2 0", "-p 0:-q 0:-r 0", "9.427073628", "21.1717152"},
        {82, "9_20^3", ".(2,-2)", ".(p,-q)", "3V1", "19.66433108"},
        {83, "9_21^3", ".-(2,2)", ".-(p,q)", "0", "21.1717152"},
        {84, "9_47", "8*-2 0", "8*-p 0", "10.0499579", "16.69568447"},
    };
    return t;
}

const std::vector<std::pair<std::string, double>>& pp_table() {
    static const std::vector<std::pair<std::string, double>> t = {
        {"2 2", 2.0298832128},   {"3 3", 4.059766426},   {"4 4", 5.2386841008},
        {"5 5", 5.907963404},    {"6 6", 6.3090903924},  {"7 7", 6.564505128},
        {"8 8", 6.7359047525},   {"9 9", 6.856023126},   {"10 10", 6.9432605638},
        {"11 11", 7.008519846},  {"12 12", 7.0585637385},{"13 13", 7.097755265},
        {"14 14", 7.1290060758}, {"15 15", 7.154316936}, {"16 16", 7.1750981657},
        {"17 17", 7.192366348},  {"18 18", 7.2068688595},{"19 19", 7.219164881},
        {"20 20", 7.2296794015}, {"21 21", 7.238740004}, {"22 22", 7.2466024333},
        {"23 23", 7.253468667},  {"24 24", 7.2594999144},
    };
    return t;
}

const std::vector<SubfamilyRow>& f_subfamilies() {
    static const std::vector<SubfamilyRow> t = {
        {2, "8*2 0.2 0", 16.6380380564, "8*(2,-2).2 0", 19.29865114},
        {3, "8*2 0.3 0", 17.7392681473, "8*(2,-2).3 0", 20.559914},
        {4, "8*2 0.4 0", 18.3010568281, "8*(2,-2).4 0", 21.21212466},
        {5, "8*2 0.5 0", 18.6120521177, "8*(2,-2).5 0", 21.5747527},
    };
    return t;
}

const std::vector<SubfamilyRow>& f_prime_subfamilies() {
    static const std::vector<SubfamilyRow> t = {
        {2, "8*2 0.-2 0", 13.2900030686, "8*(2,-2).-2 0", 16.69568447},
        {3, "8*2 0.-3 0", 17.7392681473, "8*(2,-2).-3 0", 19.29865114},
        {4, "8*2 0.-4 0", 18.3010568281, "8*(2,-2).-4 0", 20.559914},
        {5, "8*2 0.-5 0", 18.6120521177, "8*(2,-2).-5 0", 21.21212466},
    };
    return t;
}

}  // namespace linkvol
