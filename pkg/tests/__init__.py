# _author: Coke
# _date: 2024/9/21 09:20
