#include "catalog_internal.hpp"

namespace jetlie::catalog::detail {

const char* const kBase = R"(
space cga_scalar { independent t, x, y; dependent u; order 2 }
space cga_scalar3 { independent t, x, y, z; dependent u; order 2 }
space cga_pair { independent t, x, y; dependent u, v; order 2 }
space ecga_space { independent t, x, y; dependent u1, u2, u3; order 1 }
space fluid_space { independent t, x, y; dependent u1, u2, w; order 1 }
space wave_space { independent t, r1, r2, v1, v2, w; dependent Psi; order 2 }

param q, lam, a1, a2, c, s;
param l1, l2, l3, l4;

assume on cga_scalar positive u_x^2 + u_y^2;
assume on cga_scalar3 positive u_x^2 + u_y^2 + u_z^2;

# scalar equations in 1+2 dimensions
expr uu on cga_scalar = u_x^2 + u_y^2;
expr WI on cga_scalar = det[[u_t, u_x, u_y], [u_tx, u_xx, u_xy], [u_ty, u_xy, u_yy]];
expr WII on cga_scalar = det[[u_tt, u_tx, u_ty], [u_tx, u_xx, u_xy], [u_ty, u_xy, u_yy]];
expr WIII on cga_scalar = det[[0, u_x, u_y], [u_x, u_xx, u_xy], [u_y, u_xy, u_yy]];
expr galilei_arg1 on cga_scalar = u;
expr galilei_arg2 on cga_scalar = u_x^2 + u_y^2;
expr galilei_arg3 on cga_scalar = u_xx + u_yy;
expr galilei_arg4 on cga_scalar = u_x^2*u_xx + 2*u_x*u_y*u_xy + u_y^2*u_yy;
expr galilei_arg5 on cga_scalar = u_xx*u_yy - u_xy^2;
expr galilei_arg6 on cga_scalar = WI;
expr galilei_arg7 on cga_scalar = WII;
expr Z1 on cga_scalar = (u_xx + u_yy) / uu;
expr Z2 on cga_scalar = (u_x^2*u_xx + 2*u_x*u_y*u_xy + u_y^2*u_yy) / uu^2;
expr Z3 on cga_scalar = (u_xx*u_yy - u_xy^2) / uu^2;
expr Z4 on cga_scalar = WI * uu^(-5/2);

# three space dimensions
expr WI_3d on cga_scalar3 =
  det[[u_t, u_x, u_y, u_z], [u_tx, u_xx, u_xy, u_xz], [u_ty, u_xy, u_yy, u_yz], [u_tz, u_xz, u_yz, u_zz]];
expr WII_3d on cga_scalar3 =
  det[[u_tt, u_tx, u_ty, u_tz], [u_tx, u_xx, u_xy, u_xz], [u_ty, u_xy, u_yy, u_yz], [u_tz, u_xz, u_yz, u_zz]];
expr WIII_3d on cga_scalar3 =
  det[[0, u_x, u_y, u_z], [u_x, u_xx, u_xy, u_xz], [u_y, u_xy, u_yy, u_yz], [u_z, u_xz, u_yz, u_zz]];

# pairs of functions
expr uv on cga_pair = u_x*v_x + u_y*v_y;
expr Zu1 on cga_pair = (u_x^2 + u_y^2) / uv;
expr Zv1 on cga_pair = (v_x^2 + v_y^2) / uv;
expr Zu2 on cga_pair = (u_xx + u_yy) / uv;
expr Zv2 on cga_pair = (v_xx + v_yy) / uv;
expr Zu3 on cga_pair = (u_x^2*u_xx + 2*u_x*u_y*u_xy + u_y^2*u_yy) / uv^2;
expr Zv3 on cga_pair = (v_x^2*v_xx + 2*v_x*v_y*v_xy + v_y^2*v_yy) / uv^2;
expr Zu4 on cga_pair = (u_xx*u_yy - u_xy^2) / uv^2;
expr Zv4 on cga_pair = (v_xx*v_yy - v_xy^2) / uv^2;
expr WI_uuu on cga_pair = det[[u_t, u_x, u_y], [u_tx, u_xx, u_xy], [u_ty, u_xy, u_yy]];
expr WI_vuu on cga_pair = det[[v_t, v_x, v_y], [u_tx, u_xx, u_xy], [u_ty, u_xy, u_yy]];
expr WI_uvv on cga_pair = det[[u_t, u_x, u_y], [v_tx, v_xx, v_xy], [v_ty, v_xy, v_yy]];
expr WI_vvv on cga_pair = det[[v_t, v_x, v_y], [v_tx, v_xx, v_xy], [v_ty, v_xy, v_yy]];
expr WIII_uuu on cga_pair = det[[0, u_x, u_y], [u_x, u_xx, u_xy], [u_y, u_xy, u_yy]];
expr WIII_vuu on cga_pair = det[[0, v_x, v_y], [u_x, u_xx, u_xy], [u_y, u_xy, u_yy]];
expr WIII_uvv on cga_pair = det[[0, u_x, u_y], [v_x, v_xx, v_xy], [v_y, v_xy, v_yy]];
expr WIII_vvv on cga_pair = det[[0, v_x, v_y], [v_x, v_xx, v_xy], [v_y, v_xy, v_yy]];
expr Zuv on cga_pair = (u_x^2 + u_y^2)^(-5/2) * (l1*WI_uuu + l2*WI_vuu + l3*WI_uvv + l4*WI_vvv);
expr Zuv_condition on cga_pair = l1*WIII_uuu + l2*WIII_vuu + l3*WIII_uvv + l4*WIII_vvv;

# first-order systems with three unknowns
expr W1 on ecga_space = 2*u1_t + 2*u3_y - 2*u1*u1_x + u1*u2_y - 3*u2*u1_y;
expr W2 on ecga_space = 2*u2_t - 2*u3_x - 2*u2*u2_y + u2*u1_x - 3*u1*u2_x;
expr W3 on ecga_space = 2*u3_t - u2*u1_t + u1*u2_t - 2*u1*u3_x - 2*u2*u3_y
  + u1*u2*u1_x - u1*u2*u2_y - u1^2*u2_x + u2^2*u1_y;
expr curl on ecga_space = u1_y - u2_x;
expr Wstar1 on ecga_space = W1 / curl;
expr Wstar2 on ecga_space = W2 / curl;
expr Wstar3 on ecga_space = W3 / curl;
expr shear_ratio on ecga_space = (u1_x - u2_y) / curl;
expr cross_ratio on ecga_space = u1_y / curl;
expr W12star on ecga_space = (W1^2 + W2^2) / curl^2;
expr W3star on ecga_space = W3 / curl;
expr Wstar on ecga_space = (u1_x*W1^2 + u2_y*W2^2 + (u1_y + u2_x)*W1*W2) / curl^3;
expr divergence_ratio on ecga_space = (u1_x + u2_y) / curl;
expr U on ecga_space = u1_x^2 + u1_y^2 + u2_x^2 + u2_y^2;
expr U_ratio on ecga_space = U / curl^2;
expr Ustar on ecga_space = ((u1_x - u2_y)^2 + 2*u1_y^2 + 2*u2_x^2) / curl^2;
expr Vstar on ecga_space = ((u1_x - u2_y)*(W1^2 - W2^2) + 2*(u1_y + u2_x)*W1*W2) / curl^3;

system sys_4_1 on ecga_space {
  eq E1: W1;
  eq E2: W2;
  eq E3: u1_x + u2_y;
  solve u1_t from E1;
  solve u2_t from E2;
  solve u2_y from E3;
}
system sys_4_7 on ecga_space {
  eq E1: W1;
  eq E2: W2;
  eq E3: u1_y - u2_x;
  solve u1_t from E1;
  solve u2_t from E2;
  solve u1_y from E3;
}
system sys_4_8 on ecga_space {
  eq E1: W1;
  eq E2: W2;
  eq E3: W3;
  solve u1_t from E1;
  solve u2_t from E2;
  solve u3_t from E3;
}
system sys_4_2 on fluid_space {
  eq E1: u1_t + u1*u1_x + u2*u1_y - q*w_y;
  eq E2: u2_t + u1*u2_x + u2*u2_y + q*w_x;
  eq E3: u1_x + u2_y;
  solve u1_t from E1;
  solve u2_t from E2;
  solve u2_y from E3;
}
system shallow_water on fluid_space {
  eq E1: u1_t + u1*u1_x + u2*u1_y + q*w_x;
  eq E2: u2_t + u1*u2_x + u2*u2_y + q*w_y;
  eq E3: w_t + u1_x*w + u1*w_x + u2_y*w + u2*w_y;
  solve u1_t from E1;
  solve u2_t from E2;
  solve w_t from E3;
}
system mt_wave on wave_space {
  eq E: Psi_t_w - Psi_r1_v2 + Psi_r2_v1 - v1/2*Psi_r1_w - v2/2*Psi_r2_w;
  solve Psi_t_w from E;
}
system wi_equation on cga_scalar {
  eq E: WI;
  solve u_t from E;
}
system wi_equation_3d on cga_scalar3 {
  eq E: WI_3d;
  solve u_t from E;
}
system pair_condition on cga_pair {
  eq C: Zuv_condition;
  solve u_xx from C;
}

transform acceleration_2_8 on cga_scalar param p {
  x -> x + p*t^2;
}
transform projective_2_11 on cga_scalar param p {
  t -> t / (1 - p*t);
  x -> x / (1 - p*t)^2;
  y -> y / (1 - p*t)^2;
}
transform ecga_projective on ecga_space param p {
  t -> t / (1 - p*t);
  x -> x / (1 - p*t)^2;
  y -> y / (1 - p*t)^2;
  u1 -> u1 - 2*p*x / (1 - p*t);
  u2 -> u2 - 2*p*y / (1 - p*t);
  u3 -> u3 + p*(x*u2 - y*u1) / (1 - p*t);
}
transform ecga_projective_printed on ecga_space param p {
  t -> t / (1 - p*t);
  x -> x / (1 - p*t)^2;
  y -> y / (1 - p*t)^2;
  u1 -> u1 - 2*p*x / (1 - p*t);
  u2 -> u2 - 2*p*y / (1 - p*t);
  u3 -> u3 - p*(x*u2 - y*u1) / (1 - p*t);
}
transform rotation on ecga_space param p {
  x -> c*x + s*y;
  y -> -s*x + c*y;
  u1 -> c*u1 + s*u2;
  u2 -> -s*u1 + c*u2;
  relation s^2 = 1 - c^2;
  series c -> 1;
  series s -> p;
}
transform xinf_phi_t0 on fluid_space param p { w -> w + p; }
transform xinf_phi_t1 on fluid_space param p { w -> w + p*t; }
transform xinf_phi_t2 on fluid_space param p { w -> w + p*t^2; }
transform xinf_phi_t3 on fluid_space param p { w -> w + p*t^3; }
transform xinf_ecga_t0 on ecga_space param p { u3 -> u3 + p; }
transform xinf_ecga_t1 on ecga_space param p { u3 -> u3 + p*t; }
transform xinf_ecga_t2 on ecga_space param p { u3 -> u3 + p*t^2; }
transform xinf_ecga_t3 on ecga_space param p { u3 -> u3 + p*t^3; }
transform fluid_variables on fluid_space to ecga_space {
  x -> 3/2*x;
  y -> 3/2*y;
  u1 -> -u1;
  u2 -> -u2;
  u3 -> 3/2*q*w;
}
transform fluid_variables_stated on fluid_space to ecga_space {
  x -> 3/2*x;
  y -> 3/2*y;
  u3 -> 3/2*q*w;
}
)";

const char* const kCga2 = R"(
field Xm1 on cga_scalar = -@t;
field X0 on cga_scalar = -t*@t - x*@x - y*@y;
field X1 on cga_scalar = -t^2*@t - 2*t*x*@x - 2*t*y*@y;
field Y1m1 on cga_scalar = -@x;
field Y10 on cga_scalar = -t*@x;
field Y11 on cga_scalar = -t^2*@x;
field Y2m1 on cga_scalar = -@y;
field Y20 on cga_scalar = -t*@y;
field Y21 on cga_scalar = -t^2*@y;
field R on cga_scalar = y*@x - x*@y;
table cga2_table {
  [Xm1, X0] = -Xm1;
  [Xm1, X1] = -2*X0;
  [X0, X1] = -X1;
  [Xm1, Y10] = -Y1m1;
  [Xm1, Y11] = -2*Y10;
  [X0, Y1m1] = Y1m1;
  [X0, Y11] = -Y11;
  [X1, Y1m1] = 2*Y10;
  [X1, Y10] = Y11;
  [Xm1, Y20] = -Y2m1;
  [Xm1, Y21] = -2*Y20;
  [X0, Y2m1] = Y2m1;
  [X0, Y21] = -Y21;
  [X1, Y2m1] = 2*Y20;
  [X1, Y20] = Y21;
  [R, Y1m1] = Y2m1;
  [R, Y10] = Y20;
  [R, Y11] = Y21;
  [R, Y2m1] = -Y1m1;
  [R, Y20] = -Y10;
  [R, Y21] = -Y11;
}
)";

const char* const kEcga = R"(
field Xm1 on ecga_space = -@t;
field X0 on ecga_space = -t*@t - x*@x - y*@y;
field X1 on ecga_space = -t^2*@t - 2*t*x*@x - 2*t*y*@y + 2*x*@u1 + 2*y*@u2 - (x*u2 - y*u1)*@u3;
field Y1m1 on ecga_space = -@x;
field Y10 on ecga_space = -t*@x + @u1 - u2/2*@u3;
field Y11 on ecga_space = -t^2*@x + 2*t*@u1 - (2*y + t*u2)*@u3;
field Y2m1 on ecga_space = -@y;
field Y20 on ecga_space = -t*@y + @u2 + u1/2*@u3;
field Y21 on ecga_space = -t^2*@y + 2*t*@u2 + (2*x + t*u1)*@u3;
field R on ecga_space = y*@x - x*@y + u2*@u1 - u1*@u2;
field Theta on ecga_space = @u3;
field X1_printed on ecga_space = -t^2*@t - 2*t*x*@x - 2*t*y*@y + x*@u1 + y*@u2 - (x*u2 - y*u1)*@u3;
field Xinf_t0 on ecga_space = @u3;
field Xinf_t1 on ecga_space = t*@u3;
field Xinf_t2 on ecga_space = t^2*@u3;
field Xinf_t3 on ecga_space = t^3*@u3;
table ecga_table {
  [Xm1, X0] = -Xm1;
  [Xm1, X1] = -2*X0;
  [X0, X1] = -X1;
  [Xm1, Y10] = -Y1m1;
  [Xm1, Y11] = -2*Y10;
  [X0, Y1m1] = Y1m1;
  [X0, Y11] = -Y11;
  [X1, Y1m1] = 2*Y10;
  [X1, Y10] = Y11;
  [Xm1, Y20] = -Y2m1;
  [Xm1, Y21] = -2*Y20;
  [X0, Y2m1] = Y2m1;
  [X0, Y21] = -Y21;
  [X1, Y2m1] = 2*Y20;
  [X1, Y20] = Y21;
  [R, Y1m1] = Y2m1;
  [R, Y10] = Y20;
  [R, Y11] = Y21;
  [R, Y2m1] = -Y1m1;
  [R, Y20] = -Y10;
  [R, Y21] = -Y11;
  [Y10, Y20] = Theta;
  [Y1m1, Y21] = -2*Theta;
  [Y11, Y2m1] = -2*Theta;
  [R, Theta] = 0;
}
)";

const char* const kWave = R"(
field Xm1 on wave_space = -@t;
field X0 on wave_space = -t*@t - r1*@r1 - r2*@r2 + Psi*@Psi;
field X1 on wave_space = -t^2*@t - 2*t*r1*@r1 - 2*t*r2*@r2 + 2*r1*@v1 + 2*r2*@v2 - (r1*v2 - r2*v1)*@w
  + 2*t*Psi*@Psi;
field Y1m1 on wave_space = -@r1;
field Y10 on wave_space = -t*@r1 + @v1 - v2/2*@w;
field Y11 on wave_space = -t^2*@r1 + 2*t*@v1 - (2*r2 + t*v2)*@w;
field Y2m1 on wave_space = -@r2;
field Y20 on wave_space = -t*@r2 + @v2 + v1/2*@w;
field Y21 on wave_space = -t^2*@r2 + 2*t*@v2 + (2*r1 + t*v1)*@w;
field R on wave_space = r2*@r1 - r1*@r2 + v2*@v1 - v1*@v2;
field Theta on wave_space = @w;
field X1_bare on wave_space = -t^2*@t - 2*t*r1*@r1 - 2*t*r2*@r2 + 2*r1*@v1 + 2*r2*@v2 - (r1*v2 - r2*v1)*@w;
table ecga_wave_table {
  [Xm1, X0] = -Xm1;
  [Xm1, X1] = -2*X0;
  [X0, X1] = -X1;
  [Xm1, Y10] = -Y1m1;
  [Xm1, Y11] = -2*Y10;
  [X0, Y1m1] = Y1m1;
  [X0, Y11] = -Y11;
  [X1, Y1m1] = 2*Y10;
  [X1, Y10] = Y11;
  [Xm1, Y20] = -Y2m1;
  [Xm1, Y21] = -2*Y20;
  [X0, Y2m1] = Y2m1;
  [X0, Y21] = -Y21;
  [X1, Y2m1] = 2*Y20;
  [X1, Y20] = Y21;
  [R, Y1m1] = Y2m1;
  [R, Y10] = Y20;
  [R, Y11] = Y21;
  [R, Y2m1] = -Y1m1;
  [R, Y20] = -Y10;
  [R, Y21] = -Y11;
  [Y10, Y20] = Theta;
  [Y1m1, Y21] = -2*Theta;
  [Y11, Y2m1] = -2*Theta;
  [R, Theta] = 0;
}
)";

const char* const kFluid = R"(
field Xm1 on fluid_space = -@t;
field Y1m1 on fluid_space = -@x;
field Y2m1 on fluid_space = -@y;
field Y10 on fluid_space = -t*@x - @u1;
field Y20 on fluid_space = -t*@y - @u2;
field X0 on fluid_space = -2*t*@t - x*@x - y*@y + u1*@u1 + u2*@u2 + 2*w*@w;
field X1 on fluid_space = -t^2*@t - t*x*@x - t*y*@y - (x - t*u1)*@u1 - (y - t*u2)*@u2 + 2*t*w*@w;
field R on fluid_space = y*@x - x*@y + u2*@u1 - u1*@u2;
field D on fluid_space = t*@t + x*@x + y*@y;
field X0_printed on fluid_space = -t*@t - x*@x - y*@y + u1*@u1 + u2*@u2 + 2*w*@w;
field X1_printed on fluid_space = -t^2*@t - t*x*@x - t*x*@y - (x - t*u1)*@u1 - (y - t*u2)*@u2 + 2*t*w*@w;
field ecga_Y11 on fluid_space = -t^2*@x + 2*t*@u1 - (2*y + t*u2)*@w;
field Xinf_t0 on fluid_space = @w;
field Xinf_t1 on fluid_space = t*@w;
field Xinf_t2 on fluid_space = t^2*@w;
field Xinf_t3 on fluid_space = t^3*@w;
table shallow_water_table {
  [Xm1, Y10] = -Y1m1;
  [Xm1, Y20] = -Y2m1;
  [Xm1, X0] = -2*Xm1;
  [Xm1, X1] = -X0;
  [Xm1, D] = Xm1;
  [Y1m1, X0] = -Y1m1;
  [Y1m1, X1] = -Y10;
  [Y1m1, R] = -Y2m1;
  [Y1m1, D] = Y1m1;
  [Y2m1, X0] = -Y2m1;
  [Y2m1, X1] = -Y20;
  [Y2m1, R] = Y1m1;
  [Y2m1, D] = Y2m1;
  [Y10, X0] = Y10;
  [Y10, R] = -Y20;
  [Y20, X0] = Y20;
  [Y20, R] = Y10;
  [X0, X1] = -2*X1;
  [X1, D] = -X1;
}
)";

}  // namespace jetlie::catalog::detail
