# pentagon: five inequalities in the plane
dim 2
ineq 2 1 >= 5
ineq 5 -2 >= -1
ineq -2 -5 >= -46
ineq -2 1 >= -10
ineq -1 4 >= 2
