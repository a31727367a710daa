dim 2
ineq 1 0 >= 0
