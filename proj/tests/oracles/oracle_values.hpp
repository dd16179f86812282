// Copyright 2026 The isq-scatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by generate_oracles.py (mpmath, 40 digits). Do not edit.
#ifndef ISQ_TESTS_ORACLE_VALUES_HPP_
#define ISQ_TESTS_ORACLE_VALUES_HPP_

#include <complex>

namespace isq::oracle {

struct RealCase { double x; double value; };
struct OrderCase { double nu; double x; double value; };
struct JostCase { double nu; double t; std::complex<double> value; };
struct CoeffCase { double nu; double a; double b; };
struct SCase { double nu; int sgn_g; double kappa; double modulus; double argument; std::complex<double> value; };
struct BackgroundCase { double alpha; double k; double theta; std::complex<double> value; };

inline constexpr RealCase kGamma[] = {
    {0.05, 19.470085311255512864},
    {0.1, 9.5135076986687318363},
    {0.3, 2.9915689876875906283},
    {0.5, 1.7724538509055160273},
    {0.7, 1.2980553326475577857},
    {1.3, 0.89747069630627718849},
    {1.7, 0.90863873285329044998},
    {2.5, 1.3293403881791370205},
    {2.9, 1.8273550806240360969},
    {3.0, 2.0},
    {7.5, 1871.2543057977883465},
};

inline constexpr CoeffCase kCoeffs[] = {
    {0.1, 4.0677451819491921219, 3.9777171783768454972},
    {0.3, 1.4693257407182420423, 1.4020807222950776768},
    {0.5, 1.0, 1.0},
    {0.7, 0.84124843337704660608, 1.0495183862273157445},
    {0.9, 0.79554343567536909943, 2.2598584344162178455},
};

inline constexpr OrderCase kBesselJ[] = {
    {0.0, 0.5, 0.93846980724081290423},
    {0.5, 1.0, 0.67139670714180309042},
    {0.3, 1.0, 0.74022247928102045053},
    {0.7, 5.0, -0.35763991666007156294},
    {1.3, 11.0, -0.090355946377944408778},
    {0.3, 13.0, 0.14945033564763204614},
    {2.5, 20.0, -0.17258019384387642416},
    {0.3, 30.0, -0.13011079142417547299},
    {4.7, 45.0, 0.096758801823691483938},
    {0.9, 50.0, -0.087560219763350151672},
    {3.2, 2.0, 0.10102369022156791542},
    {1.7, 16.0, 0.19962237562592602841},
};

inline const JostCase kJostReal[] = {
    {0.1, 0.01, {0.37403682875731077776, -0.17589116330005969858}},
    {0.1, 1.0, {0.59772061421449341018, 0.75978569998788044178}},
    {0.1, 5.0, {0.26041019222524506095, -0.96315100381949641879}},
    {0.1, 11.0, {-0.0064344732976273349903, -0.99948991275499803176}},
    {0.1, 13.0, {0.9109545850839097328, 0.41165342050353653954}},
    {0.1, 30.0, {0.15029037493683669476, -0.98857458865563213405}},
    {0.3, 0.01, {0.54541683751817441384, -0.14725845457732130337}},
    {0.3, 1.0, {0.57955740029076686607, 0.78716479968230126175}},
    {0.3, 5.0, {0.2681623678639565444, -0.96180299568123722553}},
    {0.3, 11.0, {-0.0028159928831399174237, -0.99966965464652928142}},
    {0.3, 13.0, {0.90979420866450801547, 0.41449430972759808874}},
    {0.3, 30.0, {0.15161092511343685942, -0.98839536502117619677}},
    {0.7, 0.01, {2.010820690463182313, 0.65690939162849698642}},
    {0.7, 1.0, {0.47395909236313281506, 0.92142522236587169607}},
    {0.7, 5.0, {0.30689376649182912495, -0.95414824555091100975}},
    {0.7, 11.0, {0.015299373101431857855, -1.0003735516803027222}},
    {0.7, 13.0, {0.90385905792779189224, 0.4286530827530606738}},
    {0.7, 30.0, {0.15821076276259447828, -0.98747278107050779803}},
    {0.9, 0.01, {4.0619829426918515038, 2.9525714004449541051}},
    {0.9, 1.0, {0.37122804543236932464, 1.0241168591129448557}},
    {0.9, 5.0, {0.3378161217772083674, -0.94692237787682693961}},
    {0.9, 11.0, {0.029816471480362238619, -1.0007022987682156734}},
    {0.9, 13.0, {0.89895143693063998459, 0.43992362929657375912}},
    {0.9, 30.0, {0.16348699565474356974, -0.98670296537992480393}},
};

inline const JostCase kJostRealDerivative[] = {
    {0.3, 0.5, {-0.30743247035820496986, 1.015745719968386896}},
    {0.3, 2.0, {-0.93372341924244267371, -0.37957808955648389227}},
    {0.3, 15.0, {-0.65445437766388778359, -0.75633500791063198698}},
    {0.8, 0.2, {-1.7712979071063723347, -0.21651479315110496842}},
    {0.8, 9.0, {-0.39168992062797353771, -0.91880972950556943958}},
};

inline const JostCase kJostImaginary[] = {
    {0.2, 0.001, {0.2487965340902912683, 0.0}},
    {0.2, 0.5, {0.53443550944307324716, 0.0}},
    {0.2, 1.9, {0.14293811713713356264, 0.0}},
    {0.2, 2.1, {0.11746083491115375566, 0.0}},
    {0.2, 10.0, {0.000044947190554954500999, 0.0}},
    {0.2, 100.0, {3.7161912573143642336e-44, 0.0}},
    {0.7, 0.001, {3.348809499197030066, 0.0}},
    {0.7, 0.5, {0.69872506211672252467, 0.0}},
    {0.7, 1.9, {0.15748751890796453937, 0.0}},
    {0.7, 2.1, {0.12840278782233331586, 0.0}},
    {0.7, 10.0, {0.000045922774674877563459, 0.0}},
    {0.7, 100.0, {3.7245206110356925847e-44, 0.0}},
};

inline const SCase kSMatrix[] = {
    {0.3, 1, 1.0, 0.7, 0.0, {-0.40086783176017865996, 0.91613589682966418366}},
    {0.3, -1, 1.0, 2.5, 0.0, {0.26826682659979349774, -0.96334464743728987402}},
    {0.7, 1, 0.9, 1.3, 0.0, {0.25250857563545360133, 0.96759465647064959796}},
    {0.7, -1, 2.0, 0.4, 1.0, {-0.69118136791749560983, 0.48252959483002647218}},
    {0.45, 1, 1.5, 3.0, 4.0, {0.36939168902577784019, -0.60991545287655851452}},
    {0.45, -1, 1.5, 1.1, -2.5, {-1.6195719416527989096, 2.6999223541498895848}},
    {0.9, 1, 0.5, 0.25, 7.0, {-0.17475783559873230918, 0.98834001902624273462}},
};

inline const BackgroundCase kBackground[] = {
    {0.3, 1.0, 3.141592653589793238462643, {-0.3227510846194545588, -6.1851937634139996152e-26}},
    {0.3, 1.0, 2.0, {-0.3227510846194545588, -0.20723608821894810532}},
    {2.5, 0.7, 1.0, {-0.59522864331753456198, 0.79680170929003695247}},
    {-0.7, 2.0, 4.0, {-0.22821948056972953888, -0.10444636933491717707}},
    {1.25, 3.0, 0.5, {0.44872686672886383639, 0.48167515230339404915}},
};

}  // namespace isq::oracle

#endif  // ISQ_TESTS_ORACLE_VALUES_HPP_
