# Alternating descent polynomials of type A and B
# Main package initialization
