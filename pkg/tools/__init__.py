"""wildcount tools: Heisenberg counters and global asymptotics"""
