# unit cube [0,1]^3
dim 3
ineq 1 0 0 >= 0
ineq -1 0 0 >= -1
ineq 0 1 0 >= 0
ineq 0 -1 0 >= -1
ineq 0 0 1 >= 0
ineq 0 0 -1 >= -1
